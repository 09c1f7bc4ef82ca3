#include "kflag/io.hpp"

#include <cctype>

#include "kflag/errors.hpp"

namespace kflag::io {

namespace {

constexpr const char* kCycleHint =
    "permutations use one-line notation, not cycle notation; e.g. in S_3: "
    "id -> 1,2,3   (12) -> 2,1,3   (23) -> 1,3,2   (13) -> 3,2,1   (123) -> 2,3,1   (132) -> 3,1,2";

int parse_int(std::string_view s, std::string_view context) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    if (s.empty() || s.size() > 9) throw InvalidInput("bad integer in '" + std::string(context) + "'");
    int v = 0;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) throw InvalidInput("bad integer in '" + std::string(context) + "'");
        v = v * 10 + (c - '0');
    }
    return v;
}

template <class F>
auto guard(const char* what, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const nlohmann::ordered_json::exception& e) {
        throw InvalidInput(std::string(what) + ": " + e.what());
    }
}

Exponents read_exps(const Json& xs, const Json& ys, int n) {
    if (!xs.is_array() || !ys.is_array() || static_cast<int>(xs.size()) != n || static_cast<int>(ys.size()) != n)
        throw InvalidInput("polynomial term: x and y must be integer arrays of length n=" + std::to_string(n));
    Exponents e;
    for (const auto& v : xs) e.push_back(v.get<std::int32_t>());
    for (const auto& v : ys) e.push_back(v.get<std::int32_t>());
    return e;
}

Json to_json_set(const SupportSet& s) {
    Json out = Json::array();
    for (const auto& z : s) out.push_back(to_json(z));
    return out;
}

} // namespace

Permutation parse_permutation(std::string_view text) {
    if (text.find('(') != std::string_view::npos || text.find(')') != std::string_view::npos)
        throw InvalidInput("cannot parse permutation '" + std::string(text) + "': " + kCycleHint);
    std::vector<int> images;
    std::size_t start = 0;
    while (true) {
        auto comma = text.find(',', start);
        images.push_back(parse_int(text.substr(start, comma - start), text));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return Permutation(std::move(images));
}

Json to_json(const Permutation& w) {
    Json out = Json::array();
    for (int v : w.images()) out.push_back(v);
    return out;
}

Permutation permutation_from_json(const Json& j) {
    return guard("permutation", [&] {
        if (!j.is_array()) throw InvalidInput("permutation must be a JSON array of integers");
        return Permutation(j.get<std::vector<int>>());
    });
}

Json to_json(const LaurentPoly& f) {
    const int n = f.rank();
    Json out = Json::array();
    for (const auto& t : f.terms()) {
        Json term;
        term["coeff"] = t.coeff.get_str();
        Json xs = Json::array(), ys = Json::array();
        for (int i = 0; i < n; ++i) {
            xs.push_back(t.exps[static_cast<std::size_t>(i)]);
            ys.push_back(t.exps[static_cast<std::size_t>(n + i)]);
        }
        term["x"] = std::move(xs);
        term["y"] = std::move(ys);
        out.push_back(std::move(term));
    }
    return out;
}

LaurentPoly poly_from_json(const Json& j, std::optional<int> rank) {
    return guard("polynomial", [&] {
        const Json* terms = &j;
        if (j.is_object()) {
            const int n = j.at("n").get<int>();
            if (rank && *rank != n) throw InvalidInput("polynomial rank " + std::to_string(n) + " does not match " +
                                                      std::to_string(*rank));
            rank = n;
            terms = &j.at("terms");
        }
        if (!terms->is_array()) throw InvalidInput("polynomial must be a JSON array of terms");
        if (!rank) {
            if (terms->empty()) throw InvalidInput("cannot infer the rank of an empty polynomial; use {\"n\":..., \"terms\": []}");
            rank = static_cast<int>(terms->front().at("x").size());
        }
        std::vector<Term> out;
        for (const auto& t : *terms) {
            const auto& c = t.at("coeff");
            Coefficient coeff;
            if (c.is_string()) {
                if (coeff.set_str(c.get<std::string>(), 10) != 0)
                    throw InvalidInput("bad coefficient '" + c.get<std::string>() + "'");
            } else {
                coeff = c.get<long>();
            }
            out.push_back(Term{read_exps(t.at("x"), t.at("y"), *rank), std::move(coeff)});
        }
        return LaurentPoly::from_terms(*rank, std::move(out));
    });
}

Json to_json(const WeightVector& w) {
    Json out = Json::array();
    for (const auto& q : w.entries()) {
        Json e;
        if (!q.get_num().fits_slong_p() || !q.get_den().fits_slong_p())
            throw InvalidInput("weight entry too large for the JSON integer form");
        e["num"] = q.get_num().get_si();
        e["den"] = q.get_den().get_si();
        out.push_back(std::move(e));
    }
    return out;
}

WeightVector weights_from_json(const Json& j) {
    return guard("weights", [&] {
        if (!j.is_array()) throw InvalidInput("weights must be a JSON array");
        std::vector<Rational> out;
        for (const auto& e : j) {
            const long den = e.at("den").get<long>();
            if (den == 0) throw InvalidInput("zero denominator in weight");
            Rational q(e.at("num").get<long>(), den);
            q.canonicalize();
            out.push_back(q);
        }
        return WeightVector(std::move(out));
    });
}

WeightVector parse_weights(std::string_view text) {
    std::size_t first = text.find_first_not_of(" \t");
    if (first != std::string_view::npos && text[first] == '[') {
        Json j;
        try {
            j = Json::parse(text);
        } catch (const nlohmann::ordered_json::exception& e) {
            throw InvalidInput(std::string("weights: ") + e.what());
        }
        return weights_from_json(j);
    }
    return WeightVector::parse(text);
}

Json to_json(const RestrictionClass& alpha) {
    Json out;
    out["n"] = alpha.rank();
    Json entries = Json::array();
    for (std::size_t i = 0; i < alpha.points().size(); ++i) {
        Json e;
        e["z"] = to_json(alpha.points()[i]);
        e["value"] = to_json(alpha.entries()[i]);
        entries.push_back(std::move(e));
    }
    out["entries"] = std::move(entries);
    return out;
}

RestrictionClass restriction_class_from_json(const Json& j) {
    return guard("restriction class", [&] {
        const int n = j.at("n").get<int>();
        const auto points = enumerate(n);
        std::vector<std::optional<LaurentPoly>> slots(points.size());
        for (const auto& e : j.at("entries")) {
            const auto z = permutation_from_json(e.at("z"));
            if (z.rank() != n) throw InvalidInput("restriction class point has wrong rank");
            auto& slot = slots[lex_rank(z)];
            if (slot) throw InvalidInput("restriction class lists point " + z.to_string() + " twice");
            slot = poly_from_json(e.at("value"), n);
        }
        std::vector<LaurentPoly> entries;
        for (std::size_t i = 0; i < slots.size(); ++i) {
            if (!slots[i]) throw InvalidInput("restriction class is missing point " + points[i].to_string());
            entries.push_back(std::move(*slots[i]));
        }
        return RestrictionClass(n, std::move(entries));
    });
}

Json to_json(const SupportSet& s) { return to_json_set(s); }

Json to_json(const SupportReport& report) {
    Json out = Json::array();
    for (const auto& p : report.pairs) {
        Json e;
        e["w"] = to_json(p.w);
        e["gamma"] = to_json(p.gamma);
        e["pass"] = p.pass;
        e["support"] = to_json_set(p.support);
        e["bruhat_interval"] = to_json_set(p.interval);
        if (!p.pass) {
            Json ce = Json::array();
            for (const auto& c : p.counterexamples) {
                Json x;
                x["z"] = to_json(c.z);
                x["restriction"] = to_json(c.restriction);
                x["in_support"] = c.in_support;
                x["in_interval"] = c.in_interval;
                ce.push_back(std::move(x));
            }
            e["counterexamples"] = std::move(ce);
        }
        out.push_back(std::move(e));
    }
    return out;
}

Json to_json(const Decomposition& d) {
    Json out = Json::array();
    for (const auto& [w, a] : d) {
        Json e;
        e["w"] = to_json(w);
        e["coeff"] = to_json(a);
        out.push_back(std::move(e));
    }
    return out;
}

Decomposition decomposition_from_json(const Json& j, int n) {
    return guard("decomposition", [&] {
        Decomposition d;
        for (const auto& e : j) {
            auto w = permutation_from_json(e.at("w"));
            if (w.rank() != n) throw InvalidInput("decomposition entry has wrong rank");
            d.emplace(std::move(w), poly_from_json(e.at("coeff"), n));
        }
        return d;
    });
}

Json to_json(const RegularityReport& r) {
    Json out;
    out["regular"] = r.regular;
    Json walls = Json::array();
    for (const auto& t : r.walls) {
        Json e;
        e["v"] = to_json(t.v);
        e["gamma"] = to_json(t.gamma);
        e["k"] = t.k;
        walls.push_back(std::move(e));
    }
    out["walls"] = std::move(walls);
    return out;
}

Json to_json(const KernelGenerator& g) {
    Json e;
    e["v"] = to_json(g.v);
    e["gamma"] = to_json(g.gamma);
    e["witness_k"] = g.witnesses;
    e["poly"] = to_json(g.poly);
    return e;
}

Json to_json(const std::vector<KernelGenerator>& gens) {
    Json out = Json::array();
    for (const auto& g : gens) out.push_back(to_json(g));
    return out;
}

Json to_json(const Presentation& p) {
    Json out;
    out["n"] = p.n;
    out["lambda"] = to_json(p.lambda);
    out["mu"] = to_json(p.mu);
    Json ideal = Json::array();
    for (const auto& f : p.ideal_I) ideal.push_back(to_json(f));
    out["ideal_I"] = std::move(ideal);
    out["det_relation"] = to_json(p.det_relation);
    out["kernel"] = to_json(p.kernel);
    return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

} // namespace kflag::io
