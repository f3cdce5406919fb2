#pragma once

// JSON forms of the external interfaces: semirings (builtin tags or tables),
// Laurent polynomials, finite semimodules, finite +/- complexes, covers with
// sheaf data, unit cocycles, and monomial localizations.

#include <string>
#include <vector>

#include <json.hpp>

#include "semicech/affine.hpp"
#include "semicech/cech.hpp"
#include "semicech/laurent.hpp"
#include "semicech/pm_complex.hpp"
#include "semicech/projective.hpp"
#include "semicech/semimodule.hpp"
#include "semicech/semiring.hpp"

namespace semicech::io {

using json = nlohmann::ordered_json;

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline json must_get(const json& j, const char* key) {
    if (!j.contains(key)) throw ParseError(std::string("missing key: ") + key);
    return j.at(key);
}

inline std::vector<std::vector<int>> int_table(const json& j, const char* key) {
    auto t = must_get(j, key);
    if (!t.is_array()) throw ParseError(std::string(key) + " must be an array of rows");
    return t.get<std::vector<std::vector<int>>>();
}

/// Semiring ref: a builtin tag ("boolean", "qmax", "zmax", "nat") or a
/// table object {"size", "zero", "one", "add", "mul"}.
inline Semiring semiring_from_json(const json& j) {
    if (j.is_string()) return Semiring::by_name(j.get<std::string>());
    if (!j.is_object()) throw ParseError("semiring must be a tag or a table object");
    return Semiring::table(SemiringTable(must_get(j, "size").get<int>(),
                                         must_get(j, "zero").get<int>(),
                                         must_get(j, "one").get<int>(),
                                         int_table(j, "add"), int_table(j, "mul")));
}

inline json semiring_to_json(const Semiring& s) {
    if (!s.is_table()) return json(s.name());
    const auto& t = s.table();
    json add = json::array(), mul = json::array();
    for (int a = 0; a < t.size(); ++a) {
        json ra = json::array(), rm = json::array();
        for (int b = 0; b < t.size(); ++b) {
            ra.push_back(t.add(a, b));
            rm.push_back(t.mul(a, b));
        }
        add.push_back(ra);
        mul.push_back(rm);
    }
    return json{{"size", t.size()}, {"zero", t.zero()}, {"one", t.one()},
                {"add", add}, {"mul", mul}};
}

/// Element literal: "p/q" / "-inf" strings, plain numbers, or table indices.
inline SemiringElement element_from_json(const Semiring& ring, const json& j) {
    if (j.is_string()) return SemiringElement::parse(ring, j.get<std::string>());
    if (j.is_number_integer()) {
        if (ring.is_table()) return SemiringElement::from_index(ring, j.get<int>());
        return SemiringElement::number(ring, Rational(j.get<long long>()));
    }
    throw ParseError("element literal must be a string or an integer");
}

inline json element_to_json(const SemiringElement& e) {
    if (e.ring().is_table()) return json(e.index());
    return json(e.str());
}

inline LaurentPoly laurent_from_json(const Semiring& ring, const json& j) {
    int vars = must_get(j, "vars").get<int>();
    LaurentPoly p(ring, vars);
    for (const auto& term : must_get(j, "terms")) {
        auto exps = must_get(term, "exp").get<std::vector<int>>();
        p.add_term(exps, element_from_json(ring, must_get(term, "coef")));
    }
    return p;
}

inline json laurent_to_json(const LaurentPoly& p) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms())
        terms.push_back(json{{"exp", e}, {"coef", element_to_json(c)}});
    return json{{"vars", p.vars()}, {"terms", terms}};
}

/// {"size": n, "zero": i, "add": [[..]], "scalar": [[..]], "ring": <ref>}.
/// The ring may be supplied externally instead of inline.
inline FiniteSemimodule module_from_json(const json& j,
                                         std::optional<Semiring> ring = std::nullopt) {
    Semiring r = j.contains("ring") ? semiring_from_json(j.at("ring"))
                                    : (ring ? *ring
                                            : throw ParseError("module needs a ring"));
    return FiniteSemimodule(r, must_get(j, "size").get<int>(),
                            must_get(j, "zero").get<int>(), int_table(j, "add"),
                            int_table(j, "scalar"));
}

inline json module_to_json(const FiniteSemimodule& m, bool include_ring = true) {
    json add = json::array(), scalar = json::array();
    for (int a = 0; a < m.size(); ++a) {
        json row = json::array();
        for (int b = 0; b < m.size(); ++b) row.push_back(m.add(a, b));
        add.push_back(row);
    }
    int rs = m.ring().table().size();
    for (int r = 0; r < rs; ++r) {
        json row = json::array();
        for (int t = 0; t < m.size(); ++t) row.push_back(m.act(r, t));
        scalar.push_back(row);
    }
    json out{{"size", m.size()}, {"zero", m.zero()}, {"add", add}, {"scalar", scalar}};
    if (include_ring) out["ring"] = semiring_to_json(m.ring());
    return out;
}

/// {"ring": <ref>, "spaces": [<module>...], "d_plus": [[..]...],
///  "d_minus": [[..]...]}: one hom table per adjacent degree pair.
inline FinitePMComplex complex_from_json(const json& j) {
    Semiring ring = semiring_from_json(must_get(j, "ring"));
    std::vector<FiniteSemimodule> spaces;
    for (const auto& sj : must_get(j, "spaces")) spaces.push_back(module_from_json(sj, ring));
    auto dp_tables = int_table(j, "d_plus");
    auto dm_tables = int_table(j, "d_minus");
    if (dp_tables.size() + 1 != spaces.size() || dm_tables.size() + 1 != spaces.size())
        throw ParseError("need one d_plus/d_minus table per adjacent degree pair");
    std::vector<SemimoduleHom> dp, dm;
    for (std::size_t n = 0; n + 1 < spaces.size(); ++n) {
        dp.emplace_back(spaces[n], spaces[n + 1], dp_tables[n]);
        dm.emplace_back(spaces[n], spaces[n + 1], dm_tables[n]);
    }
    return FinitePMComplex(std::move(spaces), std::move(dp), std::move(dm));
}

inline Tuple tuple_from_string(const std::string& s) {
    Tuple t;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t next = s.find(',', pos);
        if (next == std::string::npos) next = s.size();
        t.push_back(std::stoi(s.substr(pos, next - pos)));
        pos = next + 1;
    }
    return t;
}

inline std::string tuple_to_string(const Tuple& t) {
    std::string s;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(t[i]);
    }
    return s;
}

/// {"ring": <ref>, "indices": [0,1,...], "sections": {"0,1": <module>, ...},
///  "restrictions": {"0,1<-0": [..hom table..], ...}}.
inline FiniteSheafOnCover sheaf_from_json(const json& j) {
    Semiring ring = semiring_from_json(must_get(j, "ring"));
    auto indices = must_get(j, "indices").get<std::vector<int>>();
    int n = static_cast<int>(indices.size());
    std::map<Tuple, FiniteSemimodule> sections;
    for (const auto& [key, val] : must_get(j, "sections").items())
        sections.emplace(tuple_from_string(key), module_from_json(val, ring));
    std::map<std::pair<Tuple, Tuple>, SemimoduleHom> restr;
    for (const auto& [key, val] : must_get(j, "restrictions").items()) {
        auto arrow = key.find("<-");
        if (arrow == std::string::npos)
            throw ParseError("restriction key must be TO<-FROM: " + key);
        Tuple to = tuple_from_string(key.substr(0, arrow));
        Tuple from = tuple_from_string(key.substr(arrow + 2));
        auto fi = sections.find(from);
        auto ti = sections.find(to);
        if (fi == sections.end() || ti == sections.end())
            throw ParseError("restriction endpoints lack section modules: " + key);
        restr.emplace(std::make_pair(from, to),
                      SemimoduleHom(fi->second, ti->second, val.get<std::vector<int>>()));
    }
    return FiniteSheafOnCover(ring, n, std::move(sections), std::move(restr));
}

/// {"n": n, "entries": {"0,1": {"q": <literal>, "exp": [..]}, ...}}.
inline UnitCocycle unit_cocycle_from_json(const Semiring& ring, const json& j) {
    UnitCocycle out;
    out.n = must_get(j, "n").get<int>();
    for (const auto& [key, val] : must_get(j, "entries").items()) {
        Tuple t = tuple_from_string(key);
        if (t.size() != 2) throw ParseError("cocycle entries are indexed by pairs: " + key);
        auto exps = must_get(val, "exp").get<std::vector<int>>();
        if (static_cast<int>(exps.size()) != out.n + 1)
            throw ParseError("entry " + key + " has the wrong exponent length");
        out.f.emplace(std::make_pair(t[0], t[1]),
                      UnitMonomial(element_from_json(ring, must_get(val, "q")), exps));
    }
    return out;
}

inline json unit_cocycle_to_json(const UnitCocycle& c) {
    json entries = json::object();
    for (const auto& [key, m] : c.f) {
        entries[tuple_to_string({key.first, key.second})] =
            json{{"q", element_to_json(m.coef)}, {"exp", m.exp}};
    }
    return json{{"n", c.n}, {"entries", entries}};
}

/// {"semiring": <ref>, "vars": r+1, "g": [..]}.
inline MonomialLocalization localization_from_json(const json& j) {
    return MonomialLocalization(semiring_from_json(must_get(j, "semiring")),
                                must_get(j, "vars").get<int>(),
                                must_get(j, "g").get<std::vector<int>>());
}

inline UnitMonomial unit_monomial_from_json(const Semiring& ring, const json& j) {
    return UnitMonomial(element_from_json(ring, must_get(j, "q")),
                        must_get(j, "exp").get<std::vector<int>>());
}

}  // namespace semicech::io
