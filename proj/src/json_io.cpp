#include "cyclo/json_io.hpp"

namespace cyclo {

namespace {

[[noreturn]] void bad(const std::string& what) { fail(errc::parse_error, what); }

long long get_int(const ojson& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer()) bad(std::string("missing integer ") + key);
    return j[key].get<long long>();
}

std::string vertex_name(const QuiverData& q, int k) {
    if (k < static_cast<int>(q.names.size())) return q.names[static_cast<std::size_t>(k)];
    return std::to_string(k);
}

}  // namespace

ojson rational_json(const Rational& r) { return ojson(r.str()); }

Rational rational_from_json(const ojson& j) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    bad("rational must be an integer or a \"p/q\" string");
}

ojson scalar_json(const ExactScalar& x) {
    ojson j;
    j["a"] = x.coeff_a().str();
    j["b"] = x.coeff_b().str();
    j["c"] = x.coeff_c().str();
    if (std::optional<Rational> r = x.kappa_value())
        j["kappa"] = r->str();
    else
        j["kappa"] = "transcendental";
    return j;
}

ExactScalar scalar_from_json(const ojson& j) {
    if (!j.is_object()) bad("scalar must be an object");
    Rational a = j.contains("a") ? rational_from_json(j["a"]) : Rational(0);
    Rational b = j.contains("b") ? rational_from_json(j["b"]) : Rational(0);
    Rational c = j.contains("c") ? rational_from_json(j["c"]) : Rational(0);
    if (!j.contains("kappa") || (j["kappa"].is_string() &&
                                 j["kappa"].get<std::string>() == "transcendental"))
        return ExactScalar::transcendental(a, b, c);
    return ExactScalar::at_rational_kappa(a, b, c, rational_from_json(j["kappa"]));
}

ojson box_json(const Box& b) {
    ojson j;
    j["i"] = b.comp;
    j["x"] = b.x;
    j["y"] = b.y;
    return j;
}

Box box_from_json(const ojson& j) {
    if (!j.is_object()) bad("box must be an object");
    Box b;
    b.comp = static_cast<int>(get_int(j, "i"));
    b.x = get_int(j, "x");
    b.y = get_int(j, "y");
    return b;
}

ojson multipartition_json(const MultiPartition& mp) {
    ojson comps = ojson::array();
    for (const Partition& p : mp.components()) {
        ojson rows = ojson::array();
        for (long long part : p.parts()) rows.push_back(part);
        comps.push_back(rows);
    }
    ojson j;
    j["components"] = comps;
    return j;
}

MultiPartition multipartition_from_json(const ojson& j) {
    if (!j.is_object() || !j.contains("components") || !j["components"].is_array())
        bad("multipartition must be {\"components\":[[..],..]}");
    std::vector<Partition> comps;
    for (const ojson& rows : j["components"]) {
        if (!rows.is_array()) bad("component must be an array of row lengths");
        std::vector<long long> parts;
        for (const ojson& part : rows) {
            if (!part.is_number_integer()) bad("row length must be an integer");
            parts.push_back(part.get<long long>());
        }
        comps.emplace_back(std::move(parts));
    }
    return MultiPartition(std::move(comps));
}

ojson hyperplane_json(const HyperplaneParams& hp) {
    ojson j;
    j["ell"] = hp.ell;
    j["i"] = hp.i;
    j["j"] = hp.j;
    j["m"] = hp.m;
    j["t"] = hp.t;
    return j;
}

HyperplaneParams hyperplane_from_json(const ojson& j) {
    if (!j.is_object()) bad("hyperplane must be an object");
    HyperplaneParams hp;
    hp.ell = static_cast<int>(get_int(j, "ell"));
    hp.i = static_cast<int>(get_int(j, "i"));
    hp.j = static_cast<int>(get_int(j, "j"));
    hp.m = get_int(j, "m");
    hp.t = get_int(j, "t");
    validate_hyperplane(hp);
    return hp;
}

ojson quiver_json(const QuiverData& q) {
    ojson verts = ojson::array();
    for (int k = 0; k < q.nv; ++k) verts.push_back(vertex_name(q, k));
    ojson arrows = ojson::array();
    for (const Arrow& a : q.arrows) {
        ojson ja;
        ja["t"] = vertex_name(q, a.t);
        ja["h"] = vertex_name(q, a.h);
        ja["mult"] = a.mult;
        arrows.push_back(ja);
    }
    ojson j;
    j["vertices"] = verts;
    j["arrows"] = arrows;
    return j;
}

ojson dim_vector_json(const DimVector& v, const QuiverData& q) {
    ojson j;
    for (int k = 0; k < q.nv && k < static_cast<int>(v.size()); ++k)
        j[vertex_name(q, k)] = v[static_cast<std::size_t>(k)];
    return j;
}

ojson fock_json(const FockVector& v) {
    ojson j = ojson::array();
    for (const auto& [nu, coef] : v) {
        ojson term;
        term["nu"] = multipartition_json(nu);
        term["coeff"] = coef.str();
        j.push_back(term);
    }
    return j;
}

ojson chain_json(const IdealChain& chain) {
    ojson j;
    switch (chain.algebra) {
        case AlgebraTag::GrassmannRegular: j["algebra"] = "grassmann_regular"; break;
        case AlgebraTag::GrassmannSingular: j["algebra"] = "grassmann_singular"; break;
        case AlgebraTag::SphericalCherednik: j["algebra"] = "spherical_cherednik"; break;
    }
    j["v"] = chain.v;
    j["w"] = chain.w;
    j["lambda"] = chain.lambda;
    if (chain.hp) j["hyperplane"] = hyperplane_json(*chain.hp);
    if (chain.n) j["n"] = *chain.n;
    ojson ideals = ojson::array();
    for (const IdealDescriptor& d : chain.ideals) {
        ojson jd;
        switch (d.kind) {
            case IdealKind::Zero:
                jd["kind"] = "zero";
                break;
            case IdealKind::Unit:
                jd["kind"] = "unit";
                break;
            case IdealKind::Slice: {
                jd["kind"] = "slice";
                jd["s"] = d.s;
                ojson slice;
                slice["v"] = d.vhat;
                slice["w"] = d.what;
                slice["lambda"] = d.lambda_hat;
                jd["slice"] = slice;
                if (d.leaf_dim) jd["leaf_dim"] = *d.leaf_dim;
                break;
            }
        }
        ideals.push_back(jd);
    }
    j["ideals"] = ideals;
    j["p_grass"] = chain.p_grass;
    j["p_stated"] = chain.p_stated ? ojson(*chain.p_stated) : ojson(nullptr);
    return j;
}

}  // namespace cyclo
