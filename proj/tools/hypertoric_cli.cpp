// Command-line front end.  Every subcommand prints one canonical JSON report
// (sorted keys, rationals as "p/q") or, with --table, the same data flattened.
//
// Exit codes: 0 ok, 1 a verification failed, 2 malformed or rejected input.

#include <algorithm>
#include <iostream>
#include <optional>
#include <random>

#include <CLI11.hpp>
#include <json.hpp>

#include "hypertoric/cohomology.hpp"
#include "hypertoric/fans.hpp"
#include "hypertoric/io.hpp"
#include "hypertoric/linalg.hpp"
#include "hypertoric/polyhedra.hpp"
#include "hypertoric/quiver.hpp"

using json = nlohmann::json;
using namespace hypertoric;

namespace {

struct Options
{
    std::string matrix, quiver, theta, psi;
    bool lawrence = false, table = false, json_out = false;
    std::uint64_t seed = 1;
    int max_degree = -1;
};

struct Input
{
    IntMatrix a;
    std::optional<Quiver> q;
    std::string text;
};

class VerificationFailure : public std::runtime_error
{
    public:
        using std::runtime_error::runtime_error;
};

json num(const Integer& z)
{
    if (z >= std::numeric_limits<long long>::min() && z <= std::numeric_limits<long long>::max())
        return z.convert_to<long long>();
    return z.str();
}

json rat(const Rational& q)
{
    return to_string(q);
}

json vec(const IntVector& v)
{
    json out = json::array();
    for (const auto& z : v)
        out.push_back(num(z));
    return out;
}

json vec(const RatVector& v)
{
    json out = json::array();
    for (const auto& q : v)
        out.push_back(rat(q));
    return out;
}

json vec(const CountVector& v)
{
    return json(v);
}

json mat(const IntMatrix& m)
{
    json out = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i)
        out.push_back(vec(m.row(i)));
    return out;
}

json sets(const std::vector<IndexSet>& s)
{
    return json(s);
}

json poly(const MultiPoly& p)
{
    json terms = json::array();
    for (const auto& [e, c] : p.terms())
        terms.push_back({{"exponent", e}, {"coefficient", rat(c)}});
    return {{"nvars", p.nvars()}, {"terms", terms}, {"text", p.to_string()}};
}

Input load(const Options& o)
{
    if (o.matrix.empty() == o.quiver.empty())
        throw Error(ErrorKind::ParseError, "give exactly one of --matrix FILE or --quiver FILE");
    Input in;
    if (!o.matrix.empty()) {
        in.a = parse_matrix(read_file(o.matrix));
        in.text = "matrix\n" + canonical_text(in.a);
    } else {
        in.q = parse_quiver(read_file(o.quiver));
        require_no_loops(*in.q);
        in.a = boundary_matrix(*in.q);
        in.text = "quiver\n" + canonical_text(*in.q);
    }
    return in;
}

IntVector theta_of(const Options& o, const GaleDualPair& pair)
{
    if (!o.theta.empty()) {
        IntVector t = parse_int_list(o.theta);
        if (static_cast<int>(t.size()) != pair.d())
            throw Error(ErrorKind::DimensionMismatch, "--theta needs " + std::to_string(pair.d()) + " entries");
        return t;
    }
    if (!o.psi.empty()) {
        IntVector psi = parse_int_list(o.psi);
        if (static_cast<int>(psi.size()) != pair.n())
            throw Error(ErrorKind::DimensionMismatch, "--psi needs " + std::to_string(pair.n()) + " entries");
        IntVector t = multiply(pair.a, psi);
        for (auto& z : t)
            z = -z;
        return t;
    }
    throw Error(ErrorKind::ParseError, "this command needs --theta LIST (or --psi LIST)");
}

IntVector psi_of(const Options& o, const GaleDualPair& pair, const IntVector& theta)
{
    if (o.psi.empty())
        return psi_from_theta(pair, theta);
    IntVector psi = parse_int_list(o.psi);
    if (static_cast<int>(psi.size()) != pair.n())
        throw Error(ErrorKind::DimensionMismatch, "--psi needs " + std::to_string(pair.n()) + " entries");
    IntVector t = multiply(pair.a, psi);
    for (std::size_t i = 0; i < t.size(); ++i)
        if (t[i] != -theta[i])
            throw Error(ErrorKind::DimensionMismatch, "--psi does not satisfy A psi = -theta");
    return psi;
}

void require_generic(const IntVector& theta, const IntMatrix& a)
{
    if (!is_generic(theta, a))
        throw Error(ErrorKind::NonGenericTheta, "theta lies on a wall spanned by d-1 columns of A");
}

void check(bool ok, const std::string& what)
{
    if (!ok)
        throw VerificationFailure(what);
}

json cmd_gale(const GaleDualPair& pair)
{
    return {{"A", mat(pair.a)}, {"B", mat(pair.b)}, {"d", pair.d()}, {"n", pair.n()}, {"exact", true}};
}

json cmd_unimodular(const IntMatrix& a)
{
    std::set<Integer> values;
    for (const auto& z : maximal_minors(a))
        if (!z.is_zero())
            values.insert(boost::multiprecision::abs(z));
    json minors = json::array();
    for (const auto& z : values)
        minors.push_back(num(z));
    return {{"unimodular", is_unimodular(a)}, {"minor_absolute_values", minors}};
}

json cmd_matroid(const GaleDualPair& pair)
{
    LinearMatroid ma(pair.a), mb = LinearMatroid::of_rows(pair.b);
    return {{"A", {{"rank", ma.rank()}, {"bases", ma.bases().size()}, {"coloops", ma.coloops()}}},
            {"B", {{"rank", mb.rank()},
                   {"bases", mb.bases().size()},
                   {"circuits", sets(mb.circuits())},
                   {"cocircuits", sets(mb.cocircuits())},
                   {"f_vector", vec(mb.f_vector())},
                   {"h_vector", vec(mb.h_vector())}}}};
}

json cmd_betti(const GaleDualPair& pair, const IntVector& theta, int max_degree)
{
    require_generic(theta, pair.a);
    CountVector h = LinearMatroid::of_rows(pair.b).h_vector();
    RingPresentation p = build_presentation(pair);
    CountVector hil = hilbert_function(p, max_degree >= 0 ? max_degree : pair.m() + 1);
    GaleDualPair lp = lawrence_pair(pair);
    BoundedComplex bc = bounded_complex(PolyhedronSlice(lp.a, to_rational(theta)));
    CountVector betti = betti_from_bounded_faces(bc.f);
    bool agree = trim_zeros(hil) == h && betti == h;
    json out = {{"h_vector", vec(h)},
                {"hilbert_function", vec(hil)},
                {"bounded_f_vector", vec(bc.f)},
                {"bounded_betti", vec(betti)},
                {"three_way_agreement", agree}};
    check(agree, "three-way Betti agreement (matroid h-vector, Hilbert function, bounded complex)");
    return out;
}

json cmd_chambers(const GaleDualPair& pair, bool lawrence)
{
    IntMatrix config = lawrence ? lawrence_configuration(pair.a) : pair.a;
    ChamberComplexSample s = enumerate_chambers(config, !lawrence);
    json list = json::array();
    for (const auto& c : s.chambers)
        list.push_back({{"representative", vec(c.representative)}, {"feasible_bases", sets(c.feasible)}});
    return {{"configuration", lawrence ? "lawrence" : "A"},
            {"restricted_to_pos", !lawrence},
            {"count", s.chambers.size()},
            {"arrangement_regions", s.regions},
            {"chambers", list}};
}

json cmd_triangulate(const GaleDualPair& pair, const IntVector& theta, bool lawrence)
{
    GaleDualPair g = lawrence ? lawrence_pair(pair) : pair;
    Triangulation t = triangulation_from_theta(g, theta);
    TriangulationCheck c = check_triangulation(t);
    json out = {{"max_cones", sets(t.max_cones)},
                {"stanley_reisner", sets(stanley_reisner_ideal(t))},
                {"irrelevant", sets(irrelevant_ideal(t))},
                {"checks",
                 {{"independent", c.independent},
                  {"covers", c.covers},
                  {"proper", c.proper},
                  {"unimodular", c.unimodular}}}};
    check(c.ok(), "triangulation cover and proper-intersection checks");
    return out;
}

json cmd_bounded(const GaleDualPair& pair, const IntVector& theta, const IntVector& psi, bool lawrence)
{
    require_generic(theta, pair.a);
    GaleDualPair g = lawrence ? lawrence_pair(pair) : pair;
    PolyhedronSlice p(g.a, to_rational(theta));
    BoundedComplex bc = bounded_complex(p);
    json faces = json::array();
    for (const auto& f : bc.faces)
        faces.push_back({{"dim", f.dim}, {"support", f.support}});
    long long euler = 0;
    for (std::size_t k = 0; k < bc.f.size(); ++k)
        euler += k % 2 ? -bc.f[k] : bc.f[k];
    json out = {{"f_vector", vec(bc.f)},
                {"euler_characteristic", euler},
                {"faces", faces},
                {"lattice_points", lattice_points_bounded(p, bc).size()}};
    check(euler == 1, "the bounded complex is contractible (Euler characteristic 1)");
    if (lawrence) {
        // The alternating-sum formula gives Betti numbers only for the Lawrence slice.
        out["betti"] = vec(betti_from_bounded_faces(bc.f));
        ArrangementComplex arr = arrangement_bounded_complex(pair.b, to_rational(psi));
        PosetComparison pc = compare_face_posets(arr, bc, pair.b, to_rational(psi));
        out["psi"] = vec(psi);
        out["arrangement_f_vector"] = vec(arr.f);
        out["face_poset"] = {{"bijective", pc.bijective},
                             {"dimensions", pc.dimensions},
                             {"incidences", pc.incidences},
                             {"embedding", pc.embedding}};
        check(pc.ok(), "face-poset isomorphism between the arrangement and the Lawrence bounded complex");
    }
    return out;
}

json cmd_cogenerators(const GaleDualPair& pair, const IntVector& theta, const IntVector& psi, std::uint64_t seed)
{
    require_generic(theta, pair.a);
    RingPresentation p = build_presentation(pair);
    CogeneratorSet c = volume_cogenerators(pair, to_rational(psi), seed);
    AnnihilatorReport rep = annihilator_verify(p, c);
    std::vector<MultiPoly> pulled = pullback_cogenerators(pair, c);
    json list = json::array();
    for (std::size_t i = 0; i < c.polys.size(); ++i)
        list.push_back({{"region", c.regions[i]},
                        {"volume", rat(c.volumes[i])},
                        {"polynomial", poly(c.polys[i])},
                        {"pullback", poly(pulled[i])}});
    return {{"psi", vec(psi)},
            {"count", c.polys.size()},
            {"cogenerators", list},
            {"catalecticant_ranks", vec(rep.catalecticant)},
            {"hilbert_function", vec(rep.hilbert)},
            {"annihilated", rep.generators_annihilate}};
}

json cmd_lefschetz(const GaleDualPair& pair, std::uint64_t seed)
{
    RingPresentation p = build_presentation(pair);
    LefschetzReport l = lefschetz_search(p, seed);
    CountVector h = trim_zeros(hilbert_function(p, pair.m() + 1));
    CountVector g = g_vector(h);
    CountVector ring = hilbert_modulo_class(p, l.d, static_cast<int>(g.size()) - 1);
    bool macaulay = is_macaulay_vector(g);
    json out = {{"class", vec(l.d)},
                {"ranks", l.ranks},
                {"sources", l.sources},
                {"injective", l.injective},
                {"h_vector", vec(h)},
                {"g_vector", vec(g)},
                {"macaulay", macaulay},
                {"quotient_by_class", vec(ring)}};
    check(l.injective && macaulay && ring == g, "Lefschetz injectivity and Macaulay g-vector");
    return out;
}

json cmd_quiver(const Quiver& q, const GaleDualPair& pair, const Options& o)
{
    std::vector<IndexSet> trees = spanning_trees(q);
    json cocircuits = json::array();
    for (const auto& c : cocircuit_cuts(q))
        cocircuits.push_back({{"side", c.side}, {"plus", c.plus}, {"minus", c.minus}});
    std::vector<IndexSet> cut_sets = cut_monomials(q);
    std::vector<IndexSet> circuits = LinearMatroid::of_rows(pair.b).circuits();
    json out = {{"boundary_matrix", mat(pair.a)},
                {"cycle_basis", mat(cycle_basis(q))},
                {"unimodular", is_unimodular(pair.a)},
                {"spanning_trees", trees.size()},
                {"cocircuits", cocircuits},
                {"cocircuits_match_circuits", cut_sets == circuits}};
    check(cut_sets == circuits, "cocircuit cuts equal the circuits of the cycle matroid");
    if (!o.theta.empty()) {
        IntVector theta = theta_of(o, pair);
        bool generic = is_generic_quiver(q, theta);
        out["generic"] = generic;
        if (generic) {
            json sig = json::array();
            for (const auto& t : trees)
                sig.push_back({{"tree", t}, {"sigma", sigma_tau_theta(q, t, theta)}});
            out["sigma"] = sig;
        }
    }
    return out;
}

json cmd_ale(const Input& in, const GaleDualPair& pair)
{
    AleReport r = in.q ? is_product_of_ALE(*in.q) : is_product_of_ALE(pair);
    return {{"product_of_ale", r.product}, {"factors", r.factors}, {"classes", sets(r.classes)}, {"unit_blocks", r.unit_blocks}};
}

json cmd_verify_all(const Input& in, const GaleDualPair& pair, const Options& o)
{
    IntVector theta = theta_of(o, pair);
    require_generic(theta, pair.a);
    IntVector psi = psi_of(o, pair, theta);
    json out;
    json failures = json::array();
    auto run = [&](const std::string& name, auto&& f) {
        try {
            out[name] = f();
        } catch (const VerificationFailure& e) {
            failures.push_back(name + ": " + e.what());
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::ParseError)
                throw;
            failures.push_back(name + ": " + e.what());
        }
    };
    run("betti", [&] { return cmd_betti(pair, theta, o.max_degree); });
    run("bounded", [&] { return cmd_bounded(pair, theta, psi, true); });
    run("cogenerators", [&] { return cmd_cogenerators(pair, theta, psi, o.seed); });
    run("star_collapsibility", [&] {
        GaleDualPair lp = lawrence_pair(pair);
        BoundedComplex bc = bounded_complex(PolyhedronSlice(lp.a, to_rational(theta)));
        // Positive weights from the seed; redraw while two vertices tie.
        std::mt19937_64 rng(o.seed);
        std::uniform_int_distribution<int> dist(1, 1000000);
        StarCollapseReport r;
        RatVector c(lp.n());
        for (int attempt = 0;; ++attempt) {
            for (auto& x : c)
                x = Rational(dist(rng));
            try {
                r = star_collapsibility_check(bc, c);
                break;
            } catch (const Error& e) {
                if (e.kind() != ErrorKind::NonGenericDirection || attempt == 20)
                    throw;
            }
        }
        json weights = json::array();
        for (const auto& x : c)
            weights.push_back(to_string(x));
        json j = {{"max_anchor", r.max_anchor_ok}, {"min_anchor", r.min_anchor_ok}, {"weights", weights}};
        check(r.max_anchor_ok || r.min_anchor_ok, "star-collapsibility of the bounded complex");
        return j;
    });
    run("lefschetz", [&] { return cmd_lefschetz(pair, o.seed); });
    if (in.q)
        run("quiver", [&] { return cmd_quiver(*in.q, pair, o); });
    out["failures"] = failures;
    out["ok"] = failures.empty();
    return out;
}

void flatten(const json& j, const std::string& prefix, std::ostream& os)
{
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it)
            flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), os);
    } else if (j.is_array() && !j.empty() && (j.front().is_object())) {
        for (std::size_t i = 0; i < j.size(); ++i)
            flatten(j[i], prefix + "[" + std::to_string(i) + "]", os);
    } else {
        os << prefix << " = " << j.dump() << "\n";
    }
}

int exit_code_for(ErrorKind k)
{
    switch (k) {
        case ErrorKind::ParseError:
        case ErrorKind::DimensionMismatch:
        case ErrorKind::NotFullRank:
        case ErrorKind::NonPrimitive:
        case ErrorKind::NonGenericTheta:
        case ErrorKind::DegeneratePsi:
        case ErrorKind::LoopPresent:
        case ErrorKind::Disconnected:
        case ErrorKind::InfeasibleSlice:
        case ErrorKind::NotASpanningTree:
        case ErrorKind::VariableCountMismatch:
            return 2;
        default:
            return 1;
    }
}

}   // namespace

int main(int argc, char** argv)
{
    CLI::App app{"hypertoric: invariants of toric hyperkaehler varieties from a matrix or a quiver"};
    app.require_subcommand(1, 1);
    Options o;
    const std::vector<std::string> names = {"gale",         "unimodular", "matroid",   "betti",
                                            "chambers",     "triangulate", "bounded",  "cogenerators",
                                            "lefschetz",    "quiver",     "ale-check", "verify-all"};
    for (const auto& name : names) {
        CLI::App* sub = app.add_subcommand(name);
        sub->add_option("--matrix", o.matrix, "matrix file: 'd n' then d rows");
        sub->add_option("--quiver", o.quiver, "quiver file: 'V E' then E lines 'i j'");
        sub->add_option("--theta", o.theta, "comma-separated integers")->allow_extra_args(false);
        sub->add_option("--psi", o.psi, "comma-separated integers with A psi = -theta");
        sub->add_flag("--lawrence", o.lawrence, "use the Lawrence configuration [A, -A]");
        sub->add_flag("--json", o.json_out, "JSON output (default)");
        sub->add_flag("--table", o.table, "flattened key = value output");
        sub->add_option("--seed", o.seed, "seed for pseudo-random choices");
        sub->add_option("--max-degree", o.max_degree, "last degree of Hilbert functions");
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    const std::string command = app.get_subcommands().front()->get_name();

    json report;
    int code = 0;
    try {
        Input in = load(o);
        GaleDualPair pair = make_gale_pair(in.a);
        json result;
        if (command == "gale")
            result = cmd_gale(pair);
        else if (command == "unimodular")
            result = cmd_unimodular(pair.a);
        else if (command == "matroid")
            result = cmd_matroid(pair);
        else if (command == "betti")
            result = cmd_betti(pair, theta_of(o, pair), o.max_degree);
        else if (command == "chambers")
            result = cmd_chambers(pair, o.lawrence);
        else if (command == "triangulate")
            result = cmd_triangulate(pair, theta_of(o, pair), o.lawrence);
        else if (command == "bounded") {
            IntVector theta = theta_of(o, pair);
            require_generic(theta, pair.a);
            result = cmd_bounded(pair, theta, o.lawrence ? psi_of(o, pair, theta) : IntVector{}, o.lawrence);
        } else if (command == "cogenerators") {
            IntVector theta = theta_of(o, pair);
            require_generic(theta, pair.a);
            result = cmd_cogenerators(pair, theta, psi_of(o, pair, theta), o.seed);
        } else if (command == "lefschetz")
            result = cmd_lefschetz(pair, o.seed);
        else if (command == "quiver") {
            if (!in.q)
                throw Error(ErrorKind::ParseError, "the quiver command needs --quiver FILE");
            result = cmd_quiver(*in.q, pair, o);
        } else if (command == "ale-check")
            result = cmd_ale(in, pair);
        else {
            result = cmd_verify_all(in, pair, o);
            if (!result["ok"].get<bool>()) {
                for (const auto& f : result["failures"])
                    std::cerr << "verification failed: " << f.get<std::string>() << "\n";
                code = 1;
            }
        }
        std::string extra = o.theta + "|" + o.psi + "|" + (o.lawrence ? "L" : "");
        report = {{"command", command}, {"input_digest", digest(in.text + extra)}, {"result", result}};
    } catch (const VerificationFailure& e) {
        std::cerr << "verification failed: " << e.what() << "\n";
        report = {{"command", command}, {"error", e.what()}, {"ok", false}};
        code = 1;
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return exit_code_for(e.kind());
    }
    if (o.table)
        flatten(report, "", std::cout);
    else
        std::cout << report.dump() << "\n";
    return code;
}
