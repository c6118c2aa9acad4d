#pragma once

#include <turan/chromatic.hpp>

#include <json.hpp>

#include <string>
#include <vector>

namespace turan
{
    using Json = nlohmann::ordered_json;

    /// Coordinates set in a bitset, increasing.
    std::vector<std::size_t> coordinates_of(const boost::dynamic_bitset<> & bits);
    boost::dynamic_bitset<> bits_from(const Json & coordinates, std::size_t dimension);

    Json box_to_json(const Box & box);
    Box box_from_json(const Json & j, std::size_t dimension);

    /// Schema "turan.chi/1": value, pi for each requested t, extended theory,
    /// family, boxes, uncovered pattern, trace, checks.
    Json chi_to_json(const ChiResult & result, const std::vector<int> & cliques);
    /// Rebuilds the certificate part of a result from its JSON form.
    ChiResult chi_from_json(const Json & j);
    /// Checks the JSON certificate against the extended theory it claims to
    /// answer: same theory text, same family up to isomorphism, consistent pi
    /// values and a certificate that passes verify_chi_certificate. Empty
    /// string when everything holds.
    std::string verify_chi_json(const Json & j, const ExtendedTheory & expected);
}
