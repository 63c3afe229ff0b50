#include "g3ss/json_io.hpp"

namespace g3ss {

json to_json(const FieldElement& x) {
    auto v = x.coeffs();
    return json(std::vector<std::uint64_t>(v.begin(), v.end()));
}

json to_json(const Curve& C) {
    const FieldCtx& F = *C.ctx();
    json j;
    j["p"] = F.p();
    j["k"] = F.k();
    if (F.k() > 1) j["modulus"] = F.modulus();
    json f = json::array();
    for (const FieldElement& c : C.f().coeffs()) f.push_back(to_json(c));
    j["f"] = f;
    return j;
}

Curve curve_from_json(const json& j) {
    std::uint64_t p = j.at("p").get<std::uint64_t>();
    unsigned k = j.at("k").get<unsigned>();
    FieldCtxPtr ctx;
    if (k > 1 && j.contains("modulus"))
        ctx = build_field(p, k, j.at("modulus").get<std::vector<std::int64_t>>());
    else
        ctx = build_field(p, k);
    std::vector<FieldElement> coeffs;
    for (const json& c : j.at("f"))
        coeffs.push_back(ctx->element(c.get<std::vector<std::int64_t>>()));
    return Curve::make(ctx, Poly(ctx, std::move(coeffs)));
}

json to_json(const Mat3& M) {
    json rows = json::array();
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) rows.push_back(to_json(M.at(r, c)));
    return rows;
}

namespace {

json basis_json(const std::vector<Vec3>& basis) {
    json out = json::array();
    for (const Vec3& v : basis) {
        json row = json::array();
        for (const FieldElement& x : v) row.push_back(to_json(x));
        out.push_back(row);
    }
    return out;
}

}  // namespace

json to_json(const CartierData& cd) {
    return json{{"matrix", to_json(cd.M)},
                {"a_number", cd.a_number},
                {"ker_c", basis_json(cd.ker_c)},
                {"ker_c2", basis_json(cd.ker_c2)},
                {"nilpotent", cd.nilpotent},
                {"p_rank", cd.p_rank}};
}

json to_json(const ZetaData& z) {
    json slopes = json::array();
    for (const Slope& s : z.slopes) slopes.push_back({s.num, s.den, s.multiplicity});
    // L is stored by its first half; the back half follows the functional
    // equation a_{6-i} = q^{3-i} a_i.  Emit all seven coefficients.
    auto q = static_cast<std::int64_t>(z.q);
    json L = json::array({1, z.lcoeffs[0], z.lcoeffs[1], z.lcoeffs[2], q * z.lcoeffs[1],
                          q * q * z.lcoeffs[0], q * q * q});
    return json{{"q", z.q},
                {"counts", z.counts},
                {"L", L},
                {"slopes", slopes},
                {"verdict", to_string(z.verdict)}};
}

json to_json(const TouchpointReport& tp) {
    json j;
    j["found"] = tp.found;
    if (tp.found) {
        if (tp.at_infinity)
            j["location"] = "inf";
        else
            j["location"] = to_json(*tp.x0);
        json wf = json::array();
        for (const FieldElement& c : tp.witness->f().coeffs()) wf.push_back(to_json(c));
        j["witness_f"] = wf;
    }
    return j;
}

json to_json(const Classification& cls) {
    json j;
    j["outcome"] = to_string(cls.outcome);
    j["reason"] = to_string(cls.reason);
    j["cartier"] = to_json(cls.cartier);
    j["verdict"] = to_string(cls.verdict);
    if (cls.touchpoint) j["touchpoint"] = to_json(*cls.touchpoint);
    return j;
}

json to_json(const CmReport& r) {
    json j;
    j["p"] = r.prime.p;
    j["class"] = to_string(r.prime.cls);
    if (!r.prime.reason.empty()) j["reason"] = r.prime.reason;
    j["applicable"] = r.applicable;
    j["pass"] = r.pass;
    if (r.classification) j["classification"] = to_json(*r.classification);
    return j;
}

json to_json(const Hit& h) {
    return json{{"coeffs", h.coeffs}, {"classification", to_json(h.cls)}};
}

json to_json(const SearchSummary& s) {
    return json{{"tested", s.tested},
                {"skipped", s.skipped},
                {"hits", s.hits},
                {"wall_seconds", s.wall_seconds}};
}

json to_json(const SearchResult& r) {
    json hits = json::array();
    for (const Hit& h : r.hits) hits.push_back(to_json(h));
    return json{{"hits", hits}, {"summary", to_json(r.summary)}};
}

json to_json(const TableRowReport& r) {
    return json{{"p", r.p},
                {"k", r.k},
                {"label", r.label},
                {"model_valid", r.model_valid},
                {"shape", r.shape},
                {"a_number", r.a_number},
                {"nilpotent", r.nilpotent},
                {"verdict", to_string(r.verdict)},
                {"outcome", to_string(r.outcome)},
                {"pass", r.pass}};
}

json to_json(const TableReport& r) {
    json rows = json::array();
    for (const TableRowReport& row : r.rows) rows.push_back(to_json(row));
    return json{{"rows", rows}, {"all_pass", r.all_pass}};
}

}  // namespace g3ss
