// Command-line front end: parameter conversions, asphericality tests, wall
// crystals, supports, quiver slices, and ideal chains, all in exact
// arithmetic. Output is deterministic; --format selects table or JSON.

#include <cstdint>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "cyclo/crystal.hpp"
#include "cyclo/errors.hpp"
#include "cyclo/ideals.hpp"
#include "cyclo/json_io.hpp"
#include "cyclo/multipartition.hpp"
#include "cyclo/params.hpp"
#include "cyclo/quiver.hpp"
#include "cyclo/rational.hpp"
#include "cyclo/regime.hpp"
#include "cyclo/scalar.hpp"
#include "cyclo/supports.hpp"

namespace {

using namespace cyclo;

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

long long parse_ll(const std::string& s) {
    std::size_t pos = 0;
    long long v = 0;
    try {
        v = std::stoll(s, &pos);
    } catch (const std::exception&) {
        fail(errc::parse_error, "expected an integer, got '" + s + "'");
    }
    if (pos != s.size()) fail(errc::parse_error, "expected an integer, got '" + s + "'");
    return v;
}

HyperplaneParams parse_hyperplane_flag(const std::string& s, int ell) {
    auto fields = split_commas(s);
    if (fields.size() != 4) fail(errc::parse_error, "--hyperplane expects i,j,m,t");
    HyperplaneParams hp;
    hp.ell = ell;
    hp.i = static_cast<int>(parse_ll(fields[0]));
    hp.j = static_cast<int>(parse_ll(fields[1]));
    hp.m = parse_ll(fields[2]);
    hp.t = parse_ll(fields[3]);
    validate_hyperplane(hp);
    return hp;
}

ZClass parse_zclass_flag(const std::string& s) {
    auto fields = split_commas(s);
    if (fields.size() != 2) fail(errc::parse_error, "--z expects comp,cont");
    ZClass z;
    z.comp = static_cast<int>(parse_ll(fields[0]));
    z.cont = parse_ll(fields[1]);
    return z;
}

ExactScalar parse_kappa_flag(const std::string& s) {
    if (s == "transcendental") return ExactScalar::kappa();
    return ExactScalar::at_rational_kappa(0, 1, 0, Rational::parse(s));
}

std::vector<ExactScalar> parse_scalar_list(const std::string& s, int expect,
                                           const char* flag) {
    auto fields = split_commas(s);
    if (static_cast<int>(fields.size()) != expect)
        fail(errc::parse_error, std::string(flag) + " expects " + std::to_string(expect) +
                                    " comma-separated rationals");
    std::vector<ExactScalar> out;
    out.reserve(fields.size());
    for (const auto& f : fields) out.push_back(ExactScalar::rational(Rational::parse(f)));
    return out;
}

std::string scalar_list_str(const std::vector<ExactScalar>& v) {
    std::string out = "(";
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (k) out += ", ";
        out += v[k].str();
    }
    out += ")";
    return out;
}

void emit_table(const std::vector<std::string>& header,
                const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
    for (const auto& r : rows)
        for (std::size_t c = 0; c < r.size() && c < width.size(); ++c)
            width[c] = std::max(width[c], r[c].size());
    auto line = [&](const std::vector<std::string>& r) {
        std::string out;
        for (std::size_t c = 0; c < r.size(); ++c) {
            out += r[c];
            if (c + 1 < r.size()) out += std::string(width[c] - r[c].size() + 2, ' ');
        }
        std::cout << out << "\n";
    };
    line(header);
    for (const auto& r : rows) line(r);
}

void emit_json(const ojson& j) { std::cout << j.dump(2) << "\n"; }

ojson scalar_array_json(const std::vector<ExactScalar>& v) {
    ojson a = ojson::array();
    for (const auto& x : v) a.push_back(scalar_json(x));
    return a;
}

void print_cparams(const CParams& p, const std::string& fmt) {
    if (fmt == "json") {
        ojson j;
        j["ell"] = p.ell;
        j["c0"] = scalar_json(p.c0);
        j["d"] = scalar_array_json(p.d);
        emit_json(j);
    } else {
        std::cout << "c0 = " << p.c0.str() << "\n";
        std::cout << "d = " << scalar_list_str(p.d) << "\n";
    }
}

void print_hparams(const HParams& p, const std::string& fmt) {
    if (fmt == "json") {
        ojson j;
        j["ell"] = p.ell;
        j["kappa"] = scalar_json(p.kappa);
        j["h"] = scalar_array_json(p.h);
        emit_json(j);
    } else {
        std::cout << "kappa = " << p.kappa.str() << "\n";
        std::cout << "h = " << scalar_list_str(p.h) << "\n";
    }
}

void print_sparams(const SParams& p, const std::string& fmt) {
    if (fmt == "json") {
        ojson j;
        j["ell"] = p.ell;
        j["kappa"] = scalar_json(p.kappa);
        j["s"] = scalar_array_json(p.s);
        emit_json(j);
    } else {
        std::cout << "kappa = " << p.kappa.str() << "\n";
        std::cout << "s = " << scalar_list_str(p.s) << "\n";
    }
}

std::string algebra_name(AlgebraTag tag) {
    switch (tag) {
        case AlgebraTag::GrassmannRegular: return "grassmann_regular";
        case AlgebraTag::GrassmannSingular: return "grassmann_singular";
        case AlgebraTag::SphericalCherednik: return "spherical_cherednik";
    }
    return "?";
}

void print_chain(const IdealChain& chain, const std::string& fmt) {
    if (fmt == "json") {
        emit_json(chain_json(chain));
        return;
    }
    std::cout << "algebra = " << algebra_name(chain.algebra) << "\n";
    if (chain.hp) {
        const auto& hp = *chain.hp;
        std::cout << "hyperplane = (" << hp.i << "," << hp.j << "," << hp.m << "," << hp.t
                  << ")\n";
    }
    if (chain.n) std::cout << "n = " << *chain.n << "\n";
    std::cout << "v = " << chain.v << "\n";
    std::cout << "w = " << chain.w << "\n";
    std::cout << "lambda = " << chain.lambda << "\n";
    std::cout << "p_grass = " << chain.p_grass << "\n";
    if (chain.p_stated) std::cout << "p_stated = " << *chain.p_stated << "\n";
    std::vector<std::vector<std::string>> rows;
    for (const auto& d : chain.ideals) {
        if (d.kind == IdealKind::Slice) {
            rows.push_back({"slice", std::to_string(d.s), std::to_string(d.vhat),
                            std::to_string(d.what), std::to_string(d.lambda_hat),
                            d.leaf_dim ? std::to_string(*d.leaf_dim) : "-"});
        } else {
            rows.push_back({d.kind == IdealKind::Zero ? "zero" : "unit", "-", "-", "-", "-",
                            "-"});
        }
    }
    emit_table({"kind", "s", "vhat", "what", "lambda_hat", "leaf_dim"}, rows);
}

void print_mp_list(const std::string& header, const std::string& json_key,
                   const std::vector<MultiPartition>& list, const std::string& fmt) {
    if (fmt == "json") {
        ojson j;
        j["count"] = list.size();
        ojson a = ojson::array();
        for (const auto& mp : list) a.push_back(multipartition_json(mp));
        j[json_key] = a;
        emit_json(j);
    } else {
        std::cout << header << " (" << list.size() << "):\n";
        for (const auto& mp : list) std::cout << mp.str() << "\n";
    }
}

ojson witness_json(const AsphericalWitness& w, bool from_s) {
    ojson j;
    j["condition"] = w.kind == AsphericalWitness::Kind::CondA ? "a" : "b";
    j["k"] = w.k;
    j["m"] = w.m;
    if (w.kind == AsphericalWitness::Kind::CondB) {
        j["j"] = w.j;
        if (from_s) j["khat"] = w.khat;
    }
    return j;
}

// Options shared across subcommands; only the parsed leaf reads its fields.
struct Opts {
    std::string format = "table";
    std::string from, to;
    int ell = 2;
    long long n = 0;
    std::string c0, d, kappa, h, s;
    std::string nu, z, hyperplane, op, preset;
    std::string convention = "printed";
    bool generic = false;
    long long v = 0, w = 0, lambda = 0;
};

void add_format(CLI::App* cmd, Opts& o) {
    cmd->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"table", "json"}));
}

// "--help" only: the default "-h" short flag would collide with "--h".
CLI::App* add_sub(CLI::App* parent, const std::string& name, const std::string& desc) {
    CLI::App* sub = parent->add_subcommand(name, desc);
    sub->set_help_flag("--help", "print help and exit");
    return sub;
}

Convention conv_of(const Opts& o) {
    return o.convention == "example" ? Convention::ExampleOrder : Convention::PrintedOrder;
}

ParamRegime make_regime(CLI::App* cmd, const Opts& o, int ell) {
    bool has_hp = cmd->count("--hyperplane") > 0;
    if (has_hp && o.generic)
        fail(errc::parse_error, "choose exactly one of --hyperplane and --generic");
    if (!has_hp && !o.generic) fail(errc::parse_error, "need --hyperplane i,j,m,t or --generic");
    if (o.generic) return ParamRegime::generic(ell);
    return ParamRegime::hyperplane(parse_hyperplane_flag(o.hyperplane, ell));
}

void run_convert(CLI::App* cmd, const Opts& o) {
    if (o.ell < 2) fail(errc::parse_error, "--ell must be >= 2");
    auto need = [&](const char* flag) {
        if (cmd->count(flag) == 0)
            fail(errc::parse_error, std::string("--from ") + o.from + " requires " + flag);
    };
    HParams hub;
    if (o.from == "c") {
        need("--c0");
        need("--d");
        CParams p{o.ell, ExactScalar::rational(Rational::parse(o.c0)),
                  parse_scalar_list(o.d, o.ell, "--d")};
        if (o.to == "c") {
            print_cparams(p, o.format);
            return;
        }
        hub = c_to_h(p);
    } else if (o.from == "h") {
        need("--kappa");
        need("--h");
        HParams p{o.ell, parse_kappa_flag(o.kappa), parse_scalar_list(o.h, o.ell, "--h")};
        if (o.to == "h") {
            print_hparams(p, o.format);
            return;
        }
        hub = p;
    } else {
        need("--kappa");
        need("--s");
        SParams p{o.ell, parse_kappa_flag(o.kappa), parse_scalar_list(o.s, o.ell, "--s")};
        if (o.to == "s") {
            print_sparams(p, o.format);
            return;
        }
        hub = s_to_h(p);
    }
    if (o.to == "c")
        print_cparams(h_to_c(hub), o.format);
    else if (o.to == "h")
        print_hparams(hub, o.format);
    else
        print_sparams(h_to_s(hub), o.format);
}

void run_aspherical(CLI::App* cmd, const Opts& o) {
    if (o.ell < 2) fail(errc::parse_error, "--ell must be >= 2");
    std::optional<AsphericalWitness> w;
    bool from_s = false;
    if (cmd->count("--c0") > 0) {
        if (cmd->count("--d") == 0) fail(errc::parse_error, "--c0 requires --d");
        CParams p{o.ell, ExactScalar::rational(Rational::parse(o.c0)),
                  parse_scalar_list(o.d, o.ell, "--d")};
        w = is_aspherical_c(p, o.n);
    } else if (cmd->count("--s") > 0) {
        if (cmd->count("--kappa") == 0) fail(errc::parse_error, "--s requires --kappa");
        SParams p{o.ell, parse_kappa_flag(o.kappa), parse_scalar_list(o.s, o.ell, "--s")};
        w = is_aspherical_s(p, o.n);
        from_s = true;
    } else {
        fail(errc::parse_error, "provide either --c0 with --d, or --kappa with --s");
    }
    if (o.format == "json") {
        ojson j;
        j["aspherical"] = static_cast<bool>(w);
        j["witness"] = w ? witness_json(*w, from_s) : ojson(nullptr);
        emit_json(j);
        return;
    }
    std::cout << "aspherical = " << (w ? "yes" : "no") << "\n";
    if (w) {
        std::cout << "witness: condition=" << (w->kind == AsphericalWitness::Kind::CondA ? "a" : "b");
        if (w->kind == AsphericalWitness::Kind::CondB) std::cout << " j=" << w->j;
        std::cout << " m=" << w->m << " k=" << w->k;
        if (from_s && w->kind == AsphericalWitness::Kind::CondB)
            std::cout << " khat=" << w->khat;
        std::cout << "\n";
    }
}

void run_hyperplanes(const Opts& o) {
    auto hps = enumerate_aspherical_hyperplanes(o.ell, o.n);
    if (o.format == "json") {
        ojson a = ojson::array();
        for (const auto& hp : hps) a.push_back(hyperplane_json(hp));
        emit_json(a);
        return;
    }
    std::vector<std::vector<std::string>> rows;
    for (const auto& hp : hps)
        rows.push_back({std::to_string(hp.i), std::to_string(hp.j), std::to_string(hp.m),
                        std::to_string(hp.t)});
    emit_table({"i", "j", "m", "t"}, rows);
}

void run_crystal_apply(CLI::App* cmd, const Opts& o) {
    MultiPartition nu = MultiPartition::parse(o.nu);
    ParamRegime regime = make_regime(cmd, o, nu.ell());
    ZClass z = parse_zclass_flag(o.z);
    Convention conv = conv_of(o);
    ZSignature sig = signature(nu, z, regime, conv);
    ZSignature red = reduce_signature(sig);
    std::optional<MultiPartition> res =
        o.op == "e" ? e_tilde(nu, z, regime, conv) : f_tilde(nu, z, regime, conv);
    if (o.format == "json") {
        ojson j;
        j["signature"] = sig.signs();
        j["reduced"] = red.signs();
        j["result"] = res ? multipartition_json(*res) : ojson(nullptr);
        emit_json(j);
        return;
    }
    std::cout << "signature = " << sig.signs() << "\n";
    std::cout << "reduced = " << red.signs() << "\n";
    std::cout << "result = " << (res ? res->str() : "null") << "\n";
}

void run_crystal_depth(CLI::App* cmd, const Opts& o) {
    MultiPartition nu = MultiPartition::parse(o.nu);
    ParamRegime regime = make_regime(cmd, o, nu.ell());
    long long depth = depth_by_descent(nu, regime, conv_of(o));
    if (o.format == "json") {
        ojson j;
        j["depth"] = depth;
        emit_json(j);
        return;
    }
    std::cout << "depth = " << depth << "\n";
}

void run_supports_table(const Opts& o) {
    HyperplaneParams hp = parse_hyperplane_flag(o.hyperplane, o.ell);
    auto family = singular_family(hp, o.n);
    std::set<MultiPartition> singular(family.begin(), family.end());
    auto mps = enumerate_multipartitions(o.ell, o.n);
    if (o.format == "json") {
        ojson a = ojson::array();
        for (const auto& mp : mps) {
            SupportStratum st = support_stratum(mp, hp);
            ojson j;
            j["nu"] = multipartition_json(mp);
            j["depth"] = closed_form_depth(mp, hp);
            j["support_dim"] = st.p;
            j["stratum"] = st.description;
            j["singular"] = singular.count(mp) > 0;
            a.push_back(j);
        }
        emit_json(a);
        return;
    }
    std::vector<std::vector<std::string>> rows;
    for (const auto& mp : mps) {
        SupportStratum st = support_stratum(mp, hp);
        rows.push_back({mp.str(), std::to_string(closed_form_depth(mp, hp)),
                        std::to_string(st.p), st.description,
                        singular.count(mp) ? "yes" : "no"});
    }
    emit_table({"nu", "depth", "support_dim", "stratum", "singular"}, rows);
}

struct SliceRow {
    long long s = 0, vhat = 0, what = 0;
    std::string lambda_hat;
};

void run_quiver_slice(CLI::App* cmd, const Opts& o) {
    std::vector<SliceRow> rows;
    if (o.preset == "grassmann") {
        for (const char* flag : {"--v", "--w", "--lambda"})
            if (cmd->count(flag) == 0)
                fail(errc::parse_error, "--preset grassmann requires --v, --w, --lambda");
        if (o.v < 0) fail(errc::parse_error, "--v must be >= 0");
        QuiverData q;
        q.nv = 1;
        rows.push_back({0, 0, o.w - 2 * o.v, std::to_string(o.lambda + o.v)});
        for (long long s = 1; s <= o.v; ++s) {
            Decomposition dec;
            dec.v0 = {o.v - s};
            dec.parts = {{DimVector{1}, s}};
            SliceQuiver sq =
                slice(q, DimVector{o.v}, DimVector{o.w}, dec, {ExactScalar(o.lambda)});
            rows.push_back({s, sq.vhat.at(0), sq.what.at(0), sq.lambda_hat.at(0).str()});
        }
    } else {
        for (const char* flag : {"--ell", "--n", "--hyperplane"})
            if (cmd->count(flag) == 0)
                fail(errc::parse_error, "--preset cherednik requires --ell, --n, --hyperplane");
        HyperplaneParams hp = parse_hyperplane_flag(o.hyperplane, o.ell);
        QuiverData q = cyclic_quiver(o.ell);
        DimVector v(static_cast<std::size_t>(o.ell), o.n);
        DimVector w(static_cast<std::size_t>(o.ell), 0);
        w[0] = 1;
        auto lam = cherednik_slice_parameter(hp);
        long long am = hp.m < 0 ? -hp.m : hp.m;
        for (const Decomposition& dec : cherednik_decompositions(hp, o.n)) {
            if (dec.parts.empty()) {
                rows.push_back({0, 0, am, std::to_string(hp.t)});
            } else {
                long long s = dec.parts.front().second;
                SliceQuiver sq = slice(q, v, w, dec, lam);
                rows.push_back({s, sq.vhat.at(0), sq.what.at(0), sq.lambda_hat.at(0).str()});
            }
        }
    }
    if (o.format == "json") {
        ojson a = ojson::array();
        for (const auto& r : rows) {
            ojson j;
            j["s"] = r.s;
            j["vhat"] = r.vhat;
            j["what"] = r.what;
            j["lambda_hat"] = r.lambda_hat;
            a.push_back(j);
        }
        emit_json(a);
        return;
    }
    std::vector<std::vector<std::string>> trows;
    for (const auto& r : rows)
        trows.push_back({std::to_string(r.s), std::to_string(r.vhat), std::to_string(r.what),
                         r.lambda_hat});
    emit_table({"s", "vhat", "what", "lambda_hat"}, trows);
}

void run_ideals_chain(CLI::App* cmd, const Opts& o) {
    IdealChain chain;
    if (cmd->count("--hyperplane") > 0) {
        if (cmd->count("--ell") == 0 || cmd->count("--n") == 0)
            fail(errc::parse_error, "--hyperplane requires --ell and --n");
        if (cmd->count("--v") || cmd->count("--w") || cmd->count("--lambda"))
            fail(errc::parse_error, "give either --v/--w/--lambda or --ell/--n/--hyperplane");
        chain = cherednik_chain(parse_hyperplane_flag(o.hyperplane, o.ell), o.n);
    } else {
        if (cmd->count("--v") == 0 || cmd->count("--w") == 0 || cmd->count("--lambda") == 0)
            fail(errc::parse_error, "give either --v/--w/--lambda or --ell/--n/--hyperplane");
        chain = grass_chain(o.v, o.w, o.lambda);
    }
    print_chain(chain, o.format);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact tools for cyclotomic Cherednik parameters: conversions, asphericality, "
                 "wall crystals, supports, quiver slices, and ideal chains"};
    app.set_help_flag("--help", "print help and exit");
    app.require_subcommand(1);
    Opts o;

    auto* params = add_sub(&app, "params", "parameter systems and asphericality");
    params->require_subcommand(1);

    auto* convert = add_sub(params, "convert", "convert between c/h/s parameters");
    convert->add_option("--from", o.from, "source system")
        ->required()
        ->check(CLI::IsMember({"c", "h", "s"}));
    convert->add_option("--to", o.to, "target system")
        ->required()
        ->check(CLI::IsMember({"c", "h", "s"}));
    convert->add_option("--ell", o.ell, "number of components")->required();
    convert->add_option("--c0", o.c0, "rational c0 (c system)");
    convert->add_option("--d", o.d, "comma-separated rationals d_0..d_{ell-1}");
    convert->add_option("--kappa", o.kappa, "rational kappa or 'transcendental'");
    convert->add_option("--h", o.h, "comma-separated rationals h_0..h_{ell-1}");
    convert->add_option("--s", o.s, "comma-separated rationals s_0..s_{ell-1}");
    add_format(convert, o);
    convert->callback([&o, convert] { run_convert(convert, o); });

    auto* aspherical = add_sub(params, "aspherical", "test a concrete parameter");
    aspherical->add_option("--ell", o.ell, "number of components")->required();
    aspherical->add_option("--n", o.n, "rank")->required();
    aspherical->add_option("--c0", o.c0, "rational c0 (with --d)");
    aspherical->add_option("--d", o.d, "comma-separated rationals d_0..d_{ell-1}");
    aspherical->add_option("--kappa", o.kappa, "rational kappa (with --s)");
    aspherical->add_option("--s", o.s, "comma-separated rationals s_0..s_{ell-1}");
    add_format(aspherical, o);
    aspherical->callback([&o, aspherical] { run_aspherical(aspherical, o); });

    auto* hyperplanes =
        add_sub(params, "hyperplanes", "enumerate aspherical hyperplanes");
    hyperplanes->add_option("--ell", o.ell, "number of components")->required();
    hyperplanes->add_option("--n", o.n, "rank")->required();
    add_format(hyperplanes, o);
    hyperplanes->callback([&o] { run_hyperplanes(o); });

    auto* crystal = add_sub(&app, "crystal", "wall-crossing crystal operators");
    crystal->require_subcommand(1);

    auto* apply = add_sub(crystal, "apply", "apply e~ or f~ in one class");
    apply->add_option("--nu", o.nu, "multipartition, e.g. ((2,2),(2))")->required();
    apply->add_option("--op", o.op, "operator")->required()->check(CLI::IsMember({"e", "f"}));
    apply->add_option("--z", o.z, "class key comp,cont")->required();
    apply->add_option("--hyperplane", o.hyperplane, "wall i,j,m,t");
    apply->add_flag("--generic", o.generic, "fully generic parameters");
    apply->add_option("--convention", o.convention, "signature reading order")
        ->check(CLI::IsMember({"printed", "example"}));
    add_format(apply, o);
    apply->callback([&o, apply] { run_crystal_apply(apply, o); });

    auto* depth = add_sub(crystal, "depth", "depth by repeated e~ descent");
    depth->add_option("--nu", o.nu, "multipartition")->required();
    depth->add_option("--hyperplane", o.hyperplane, "wall i,j,m,t");
    depth->add_flag("--generic", o.generic, "fully generic parameters");
    depth->add_option("--convention", o.convention, "signature reading order")
        ->check(CLI::IsMember({"printed", "example"}));
    add_format(depth, o);
    depth->callback([&o, depth] { run_crystal_depth(depth, o); });

    auto* supports = add_sub(&app, "supports", "supports of simple modules on a wall");
    supports->require_subcommand(1);

    auto* table = add_sub(supports, "table", "depth/support table for all |nu| = n");
    table->add_option("--ell", o.ell, "number of components")->required();
    table->add_option("--n", o.n, "rank")->required();
    table->add_option("--hyperplane", o.hyperplane, "wall i,j,m,t")->required();
    add_format(table, o);
    table->callback([&o] { run_supports_table(o); });

    auto* quiver = add_sub(&app, "quiver", "quiver variety computations");
    quiver->require_subcommand(1);

    auto* qslice = add_sub(quiver, "slice", "slice data for each stratum level");
    qslice->add_option("--preset", o.preset, "problem family")
        ->required()
        ->check(CLI::IsMember({"cherednik", "grassmann"}));
    qslice->add_option("--ell", o.ell, "number of components (cherednik)");
    qslice->add_option("--n", o.n, "rank (cherednik)");
    qslice->add_option("--hyperplane", o.hyperplane, "wall i,j,m,t (cherednik)");
    qslice->add_option("--v", o.v, "dimension v (grassmann)");
    qslice->add_option("--w", o.w, "framing w (grassmann)");
    qslice->add_option("--lambda", o.lambda, "integral parameter (grassmann)");
    add_format(qslice, o);
    qslice->callback([&o, qslice] { run_quiver_slice(qslice, o); });

    auto* ideals = add_sub(&app, "ideals", "two-sided ideal chains");
    ideals->require_subcommand(1);

    auto* chain = add_sub(ideals, "chain", "full ideal chain");
    chain->add_option("--v", o.v, "dimension v (Grassmannian case)");
    chain->add_option("--w", o.w, "framing w (Grassmannian case)");
    chain->add_option("--lambda", o.lambda, "integral parameter (Grassmannian case)");
    chain->add_option("--ell", o.ell, "number of components (Cherednik case)");
    chain->add_option("--n", o.n, "rank (Cherednik case)");
    chain->add_option("--hyperplane", o.hyperplane, "wall i,j,m,t (Cherednik case)");
    add_format(chain, o);
    chain->callback([&o, chain] { run_ideals_chain(chain, o); });

    auto* annihilated =
        add_sub(ideals, "annihilated", "simples killed by the smallest proper ideal");
    annihilated->add_option("--ell", o.ell, "number of components")->required();
    annihilated->add_option("--n", o.n, "rank")->required();
    annihilated->add_option("--hyperplane", o.hyperplane, "wall i,j,m,t")->required();
    add_format(annihilated, o);
    annihilated->callback([&o] {
        auto list = annihilated_simples(parse_hyperplane_flag(o.hyperplane, o.ell), o.n);
        print_mp_list("annihilated simples", "simples", list, o.format);
    });

    auto* k0 = add_sub(ideals, "k0", "kernel generators of the K0 restriction map");
    k0->add_option("--ell", o.ell, "number of components")->required();
    k0->add_option("--n", o.n, "rank")->required();
    k0->add_option("--hyperplane", o.hyperplane, "wall i,j,m,t")->required();
    add_format(k0, o);
    k0->callback([&o] {
        auto list = k0_kernel(parse_hyperplane_flag(o.hyperplane, o.ell), o.n);
        print_mp_list("k0 kernel generators", "generators", list, o.format);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const cyclo::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == cyclo::errc::parse_error ? 2 : 3;
    }
    return 0;
}
