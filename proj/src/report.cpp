#include <turan/report.hpp>

#include <turan/canon.hpp>
#include <turan/dsl.hpp>
#include <turan/enumerate.hpp>
#include <turan/error.hpp>

#include <algorithm>

namespace turan
{
    std::vector<std::size_t> coordinates_of(const boost::dynamic_bitset<> & bits)
    {
        std::vector<std::size_t> out;
        for (auto i = bits.find_first(); i != boost::dynamic_bitset<>::npos; i = bits.find_next(i))
            out.push_back(i);
        return out;
    }

    boost::dynamic_bitset<> bits_from(const Json & coordinates, std::size_t dimension)
    {
        boost::dynamic_bitset<> out(dimension);
        for (const auto & c : coordinates) {
            auto i = c.get<std::size_t>();
            if (i >= dimension)
                throw Error("coordinate " + std::to_string(i) + " outside a space of dimension " + std::to_string(dimension));
            out.set(i);
        }
        return out;
    }

    Json box_to_json(const Box & box)
    {
        return Json{{"member", box.source}, {"order", box.order.to_string()}, {"required", coordinates_of(box.required)},
            {"forbidden", coordinates_of(box.forbidden)}};
    }

    Box box_from_json(const Json & j, std::size_t dimension)
    {
        Box b;
        b.source = j.at("member").get<int>();
        b.required = bits_from(j.at("required"), dimension);
        b.forbidden = bits_from(j.at("forbidden"), dimension);
        return b;
    }

    namespace
    {
        const char * kind_name(ChiKind k)
        {
            switch (k) {
            case ChiKind::Finite:
                return "finite";
            case ChiKind::Infinity:
                return "infinity";
            case ChiKind::Undecided:
                return "undecided";
            }
            return "?";
        }
    }

    Json chi_to_json(const ChiResult & result, const std::vector<int> & cliques)
    {
        Json j;
        j["schema"] = "turan.chi/1";
        j["chi"] = result.value.to_string();
        j["kind"] = kind_name(result.value.kind);
        j["value"] = result.value.value;
        Json pis = Json::object();
        if (result.value.kind != ChiKind::Undecided)
            for (int t : cliques)
                pis[std::to_string(t)] = pi(result.value, t).to_string();
        j["pi"] = pis;
        j["degenerate"] = result.degenerate;
        j["extended_theory"] = print_theory(result.extended.theory);
        j["edge"] = result.extended.edge;
        j["shortcut"] = result.extended.shortcut;
        j["variable_count"] = result.variable_count;
        Json family = Json::array();
        for (const auto & m : result.family)
            family.push_back(to_text(m));
        j["family"] = family;
        const auto & lang = result.extended.theory.language_ptr();
        auto orders_of = [&](const std::vector<Box> & boxes, int parts) {
            Json arr = Json::array();
            for (const auto & b : boxes) {
                auto e = box_to_json(b);
                e["parts"] = parts;
                arr.push_back(e);
            }
            return arr;
        };
        j["complete_boxes"] = orders_of(result.complete_boxes, 1);
        j["witnesses"] = orders_of(result.witnesses, result.value.kind == ChiKind::Finite ? result.value.value : 0);
        if (result.uncovered) {
            SignatureSpace space(lang, result.uncovered_level);
            j["uncovered"] = Json{{"level", result.uncovered_level}, {"coordinates", coordinates_of(*result.uncovered)},
                {"text", pattern_to_text(*result.uncovered, space)}};
        }
        else
            j["uncovered"] = nullptr;
        Json trace = Json::array();
        for (const auto & r : result.trace)
            trace.push_back(Json{{"level", r.level}, {"covered", r.covered}, {"boxes", r.boxes}, {"nodes", r.nodes}});
        j["trace"] = trace;
        j["checks"] = result.checks;
        return j;
    }

    ChiResult chi_from_json(const Json & j)
    {
        if (j.value("schema", "") != "turan.chi/1")
            throw Error("not a chi certificate (schema turan.chi/1 expected)");
        ChiResult r;
        auto kind = j.at("kind").get<std::string>();
        int value = j.at("value").get<int>();
        if (kind == "finite")
            r.value = ChiValue::finite(value);
        else if (kind == "infinity")
            r.value = ChiValue::infinity();
        else if (kind == "undecided")
            r.value = ChiValue::undecided(value);
        else
            throw Error("unknown chi kind '" + kind + "'");
        r.extended.theory = parse_theory(j.at("extended_theory").get<std::string>());
        r.extended.edge = j.at("edge").get<int>();
        r.extended.shortcut = j.value("shortcut", false);
        r.degenerate = j.value("degenerate", false);
        r.variable_count = j.value("variable_count", 0);
        const auto & lang = r.extended.theory.language_ptr();
        for (const auto & text : j.at("family"))
            r.family.push_back(parse_structure(text.get<std::string>(), lang));
        auto boxes_of = [&](const Json & arr) {
            std::vector<Box> out;
            for (const auto & e : arr) {
                int parts = e.at("parts").get<int>();
                if (parts < 1)
                    throw Error("box with no parts");
                SignatureSpace space(lang, parts);
                Box b = box_from_json(e, space.dimension());
                b.order = parse_split_order(e.at("order").get<std::string>(), parts);
                out.push_back(std::move(b));
            }
            return out;
        };
        if (j.contains("trace"))
            for (const auto & e : j.at("trace"))
                r.trace.push_back(LevelRecord{e.at("level").get<int>(), e.at("covered").get<bool>(), e.at("boxes").get<std::size_t>(),
                    e.at("nodes").get<std::uint64_t>()});
        if (j.contains("checks"))
            r.checks = j.at("checks").get<std::vector<std::string>>();
        r.complete_boxes = boxes_of(j.at("complete_boxes"));
        r.witnesses = boxes_of(j.at("witnesses"));
        if (! j.at("uncovered").is_null()) {
            r.uncovered_level = j.at("uncovered").at("level").get<int>();
            SignatureSpace space(lang, r.uncovered_level);
            r.uncovered = bits_from(j.at("uncovered").at("coordinates"), space.dimension());
        }
        return r;
    }

    std::string verify_chi_json(const Json & j, const ExtendedTheory & expected)
    {
        ChiResult r;
        try {
            r = chi_from_json(j);
        }
        catch (const std::exception & e) {
            return std::string("malformed certificate: ") + e.what();
        }
        if (print_theory(r.extended.theory) != print_theory(expected.theory) || r.extended.edge != expected.edge)
            return "certificate answers a different theory";
        std::vector<CanonicalCode> claimed, actual;
        for (const auto & m : r.family)
            claimed.push_back(canonical_code(m));
        for (const auto & m : minimal_non_models(expected.theory))
            actual.push_back(canonical_code(m));
        std::sort(claimed.begin(), claimed.end());
        std::sort(actual.begin(), actual.end());
        if (claimed != actual)
            return "family differs from the minimal non-models of the theory";
        if (r.value.kind != ChiKind::Undecided)
            for (const auto & [t, text] : j.at("pi").items())
                if (pi(r.value, std::stoi(t)).to_string() != text.get<std::string>())
                    return "pi^" + t + " does not follow from chi";
        return verify_chi_certificate(r);
    }
}
