#include "anloc/cli.hpp"

#include <CLI11.hpp>
#include <sstream>

#include "anloc/errors.hpp"
#include "anloc/euler.hpp"
#include "anloc/hyperbolicity.hpp"
#include "anloc/io.hpp"
#include "anloc/polytopes.hpp"

namespace anloc::cli {

namespace {

using io::json;

struct Options {
    std::int64_t n = 1, m = 0, d = 5, r = 0, k = 4;
    std::int64_t dmax = 10, nmax = 4, mmax = 20;
    int shift = 0;
    std::string method, format = "plain", of = "chi-loc", piece = "C", inject;
    bool m_given = false;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

void allow_formats(const Options& o, std::initializer_list<const char*> allowed) {
    for (const char* f : allowed)
        if (o.format == f) return;
    throw UsageError("format '" + o.format + "' is not available for this command");
}

std::string emit(const Options& o, const json& j, const std::string& plain) {
    return o.format == "json" ? j.dump() + "\n" : plain + "\n";
}

std::string plain_qpoly(const QuasiPolynomial& q, char var) {
    std::ostringstream os;
    for (std::int64_t r = 0; r < q.period(); ++r) {
        os << var << " = " << r << " mod " << q.period() << ": " << Polynomial(q.row(r)).to_string(var);
        if (r + 1 < q.period()) os << '\n';
    }
    return os.str();
}

polytopes::HalfOpenPolytope select_piece(const Options& o) {
    auto pieces = polytopes::an_pieces(o.n);
    if (o.piece == "C") return pieces.c;
    if (o.piece.size() > 1 && o.piece[0] == 'P') {
        std::int64_t i = 0;
        try {
            i = std::stoll(o.piece.substr(1));
        } catch (const std::exception&) {
            throw UsageError("piece must be C or P<i>");
        }
        if (i < 1 || i > o.n) throw DomainError("piece index must lie in 1.." + std::to_string(o.n));
        return pieces.p[i - 1];
    }
    throw UsageError("piece must be C or P<i>");
}

std::string chi_loc_cmd(const Options& o) {
    allow_formats(o, {"plain", "json"});
    const std::string method = o.method.empty() ? "closed" : o.method;
    std::int64_t v = 0;
    if (method == "closed") v = euler::chi_loc_closed(o.n, o.m);
    else if (method == "genfun") v = euler::chi_loc_series(o.n, o.m + 1).back();
    else if (method == "delta") v = euler::chi_loc_delta(o.n, o.m);
    else if (method == "weighted") v = euler::chi_loc_weighted(o.n, o.m);
    else throw UsageError("unknown chi-loc method '" + method + "'");
    return emit(o, {{"n", o.n}, {"m", o.m}, {"chi_loc", v}}, std::to_string(v));
}

std::string chi0_cmd(const Options& o) {
    allow_formats(o, {"plain", "json"});
    const std::string method = o.method.empty() ? "direct" : o.method;
    std::int64_t v = 0;
    if (method == "direct") v = euler::chi0_direct(o.n, o.m);
    else if (method == "polytopes") v = euler::chi0_polytopes(o.n, o.m);
    else if (method == "qpoly") v = to_int64(euler::chi0_qpoly(o.n)(o.m));
    else throw UsageError("unknown chi0 method '" + method + "'");
    return emit(o, {{"n", o.n}, {"m", o.m}, {"chi0", v}}, std::to_string(v));
}

std::string chi1_cmd(const Options& o) {
    allow_formats(o, {"plain", "json"});
    euler::ChiReport rep{o.n, o.m, euler::chi_loc_closed(o.n, o.m), euler::chi0_direct(o.n, o.m), 0, true};
    rep.chi1 = euler::chi1(o.n, o.m);
    return emit(o, io::to_json(rep), std::to_string(rep.chi1));
}

QuasiPolynomial qpoly_of(const Options& o) {
    if (o.of == "chi-loc") return euler::chi_loc_qpoly(o.n);
    if (o.of == "chi0") return euler::chi0_qpoly(o.n);
    if (o.of == "chi1") return euler::chi_loc_qpoly(o.n) - euler::chi0_qpoly(o.n);
    throw UsageError("--of must be chi-loc, chi0 or chi1");
}

std::string qpoly_cmd(const Options& o) {
    allow_formats(o, {"plain", "json"});
    const auto q = qpoly_of(o);
    return emit(o, io::to_json(q), plain_qpoly(q, 'm'));
}

std::string genfun_cmd(const Options& o) {
    allow_formats(o, {"plain", "json"});
    if (o.shift != 0 && o.shift != 1) throw UsageError("--shift must be 0 or 1");
    const RationalFunction f = (o.of == "chi-loc" && o.shift == 0) ? euler::chi_loc_genfun(o.n)
                                                                    : qpoly_to_genfun(qpoly_of(o), o.shift);
    return emit(o, io::to_json(f), f.to_string('t'));
}

std::string ehrhart_cmd(const Options& o) {
    allow_formats(o, {"plain", "json"});
    const auto poly = select_piece(o);
    const auto q = polytopes::ehrhart(poly);
    const auto f = qpoly_to_genfun(q, 1);
    const Rational vol = polytopes::volume(poly);
    json j = {{"piece", o.piece}, {"n", o.n}, {"volume", io::to_json(vol)}, {"qpoly", io::to_json(q)},
              {"genfun", io::to_json(f)}};
    return emit(o, j,
                "volume " + to_string(vol) + "\n" + plain_qpoly(q, 't') + "\nsum L(m+1) t^m = " + f.to_string('t'));
}

std::string describe_cmd(const Options& o) {
    allow_formats(o, {"plain", "json"});
    const auto pieces = polytopes::an_pieces(o.n);
    auto piece_json = [](const polytopes::HalfOpenPolytope& p) {
        json j = io::to_json(p);
        j["volume"] = io::to_json(polytopes::volume(p));
        j["denominator"] = polytopes::denominator_lcm(p);
        return j;
    };
    json ps = json::array();
    for (const auto& p : pieces.p) ps.push_back(piece_json(p));
    const Rational g0 = euler::g0_volume(o.n);
    json j = {{"n", o.n},
              {"C", piece_json(pieces.c)},
              {"P", ps},
              {"g0_volume", io::to_json(g0)},
              {"chi1_cubic", io::to_json(euler::chi1_cubic_coefficient(o.n))}};
    std::ostringstream os;
    os << "C_" << o.n << ": volume " << to_string(polytopes::volume(pieces.c)) << ", "
       << pieces.c.vertices().size() << " vertices\n";
    for (std::size_t i = 0; i < pieces.p.size(); ++i) {
        os << "P_" << i + 1 << ": volume " << to_string(polytopes::volume(pieces.p[i])) << ", "
           << pieces.p[i].vertices().size() << " vertices\n";
    }
    os << "chi0 cubic coefficient " << to_string(g0) << "\nchi1 cubic coefficient "
       << to_string(euler::chi1_cubic_coefficient(o.n));
    return emit(o, j, os.str());
}

std::string rdn_cmd(const Options& o, std::string& err) {
    const auto t = hyperbolicity::rdn_table(o.dmax, o.nmax);
    for (const auto& c : t.cells)
        if (c.flagged) err += "note: (d,n) = (" + std::to_string(c.d) + "," + std::to_string(c.n) + ") " +
                              hyperbolicity::kFlagNote + "\n";
    if (o.format == "csv") return hyperbolicity::to_csv(t);
    if (o.format == "tex") return hyperbolicity::to_tex(t);
    if (o.format == "json") return io::to_json(t).dump() + "\n";
    return hyperbolicity::to_markdown(t);
}

std::string check_surface_cmd(const Options& o) {
    allow_formats(o, {"plain", "json"});
    const hyperbolicity::SurfaceProfile p{o.d, o.n, o.r};
    const Rational cubic = hyperbolicity::h0_cubic_coefficient(p);
    const std::int64_t rmin = hyperbolicity::r_min(o.d, o.n);
    const std::int64_t miyaoka = hyperbolicity::miyaoka_max(o.d, o.n);
    json j = {{"d", o.d},
              {"n", o.n},
              {"r", o.r},
              {"cubic_coefficient", io::to_json(cubic)},
              {"r_min", rmin},
              {"miyaoka_max", miyaoka},
              {"big", cubic > 0},
              {"within_miyaoka", o.r <= miyaoka}};
    std::ostringstream os;
    os << "m^3 coefficient " << to_string(cubic) << (cubic > 0 ? " > 0: big cotangent bundle" : " <= 0: inconclusive")
       << "\nr_min " << rmin << ", Miyaoka bound " << miyaoka;
    if (o.m_given) {
        const Integer h0 = hyperbolicity::h0_lower_bound(p, o.m);
        j["m"] = o.m;
        j["h0_lower_bound"] = h0.fits_slong_p() ? json(h0.get_si()) : json(to_string(h0));
        os << "\nh0(S^" << o.m << ") >= " << to_string(h0);
    }
    return emit(o, j, os.str());
}

std::string labs_cmd(const Options& o) {
    allow_formats(o, {"plain", "json"});
    const auto v = hyperbolicity::labs_check(o.k);
    std::ostringstream os;
    os << "d=" << v.d << " A_" << v.n << ": available " << v.available << ", required " << v.required << " -> "
       << (v.verdict ? "big" : "not enough");
    return emit(o, io::to_json(v), os.str());
}

std::string validate_cmd(const Options& o, int& status) {
    allow_formats(o, {"plain", "json"});
    euler::Methods methods = euler::Methods::standard();
    if (!o.inject.empty()) {
        const auto mut = euler::parse_mutation(o.inject);
        if (!mut) throw UsageError("unknown mutation '" + o.inject + "'");
        methods = euler::mutated(*mut);
    }
    const auto rep = euler::validate(o.nmax, o.mmax, methods);
    status = rep.ok ? 0 : 2;
    std::string plain = rep.ok ? "ok: " + std::to_string(rep.cells) + " cells, reference rows match"
                               : "FAIL " + rep.methods + " at n=" + std::to_string(rep.n) +
                                     (rep.m >= 0 ? ", m=" + std::to_string(rep.m) : "") + ": " + rep.detail;
    return emit(o, io::to_json(rep), plain);
}

}  // namespace

Result run(const std::vector<std::string>& args) {
    Result res;
    Options o;
    CLI::App app{"Local Euler characteristics of symmetric differentials at A_n singularities", "anloc"};
    app.require_subcommand(1, 1);
    app.set_help_all_flag("--help-all");

    auto fmt = [&](CLI::App* s, std::initializer_list<std::string> allowed) {
        s->add_option("--format", o.format, "output format")->check(CLI::IsMember(std::vector<std::string>(allowed)));
    };
    auto nm = [&](CLI::App* s) {
        s->add_option("--n", o.n, "A_n index")->required()->check(CLI::PositiveNumber);
        s->add_option("--m", o.m, "symmetric power")->required()->check(CLI::NonNegativeNumber);
    };

    auto* chi_loc = app.add_subcommand("chi-loc", "local Euler characteristic chi_loc(n, m)");
    nm(chi_loc);
    chi_loc->add_option("--method", o.method, "closed | genfun | delta | weighted");
    fmt(chi_loc, {"plain", "json"});

    auto* chi0 = app.add_subcommand("chi0", "chi^0(n, m)");
    nm(chi0);
    chi0->add_option("--method", o.method, "direct | polytopes | qpoly");
    fmt(chi0, {"plain", "json"});

    auto* chi1 = app.add_subcommand("chi1", "chi^1(n, m) = chi_loc - chi^0");
    nm(chi1);
    fmt(chi1, {"plain", "json"});

    auto* qpoly = app.add_subcommand("qpoly", "quasi-polynomial in m");
    qpoly->add_option("--n", o.n)->required()->check(CLI::PositiveNumber);
    qpoly->add_option("--of", o.of, "chi-loc | chi0 | chi1");
    fmt(qpoly, {"plain", "json"});

    auto* genfun = app.add_subcommand("genfun", "generating function in t");
    genfun->add_option("--n", o.n)->required()->check(CLI::PositiveNumber);
    genfun->add_option("--of", o.of, "chi-loc | chi0 | chi1");
    genfun->add_option("--shift", o.shift, "0: sum Q(m) t^m, 1: sum Q(m+1) t^m");
    fmt(genfun, {"plain", "json"});

    auto* ehr = app.add_subcommand("ehrhart", "Ehrhart data of one piece");
    ehr->add_option("--n", o.n)->required()->check(CLI::PositiveNumber);
    ehr->add_option("--piece", o.piece, "C or P<i>");
    fmt(ehr, {"plain", "json"});

    auto* describe = app.add_subcommand("describe", "pieces of the chi^0 region");
    describe->add_option("--n", o.n)->required()->check(CLI::PositiveNumber);
    fmt(describe, {"plain", "json"});

    auto* rdn = app.add_subcommand("rdn", "threshold table r(d, n)");
    rdn->add_option("--dmax", o.dmax)->check(CLI::Range(std::int64_t{5}, std::int64_t{1000}));
    rdn->add_option("--nmax", o.nmax)->check(CLI::Range(std::int64_t{1}, std::int64_t{200}));
    fmt(rdn, {"plain", "json", "csv", "tex"});

    auto* surface = app.add_subcommand("check-surface", "cubic growth test for a degree d surface");
    surface->add_option("--d", o.d)->required();
    surface->add_option("--n", o.n)->required()->check(CLI::PositiveNumber);
    surface->add_option("--r", o.r)->required()->check(CLI::NonNegativeNumber);
    surface->add_option("--m", o.m, "also report the h0 lower bound at this m (>= 3)");
    fmt(surface, {"plain", "json"});

    auto* labs = app.add_subcommand("labs", "degree 2k surfaces with 4k^2 A_{k-1} points");
    labs->add_option("--k", o.k)->required();
    fmt(labs, {"plain", "json"});

    auto* validate = app.add_subcommand("validate", "cross-check every method on a grid");
    validate->add_option("--nmax", o.nmax)->check(CLI::PositiveNumber);
    validate->add_option("--mmax", o.mmax)->check(CLI::NonNegativeNumber);
    validate->add_option("--inject", o.inject)->group("");  // hidden: seeded mutation
    fmt(validate, {"plain", "json"});

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        std::ostringstream out, err;
        res.status = app.exit(e, out, err) == 0 ? 0 : 1;
        res.out = out.str();
        res.err = err.str();
        return res;
    }
    o.m_given = surface->count("--m") > 0;

    try {
        auto* sub = app.get_subcommands().front();
        const std::string verb = sub->get_name();
        if (verb == "chi-loc") res.out = chi_loc_cmd(o);
        else if (verb == "chi0") res.out = chi0_cmd(o);
        else if (verb == "chi1") res.out = chi1_cmd(o);
        else if (verb == "qpoly") res.out = qpoly_cmd(o);
        else if (verb == "genfun") res.out = genfun_cmd(o);
        else if (verb == "ehrhart") res.out = ehrhart_cmd(o);
        else if (verb == "describe") res.out = describe_cmd(o);
        else if (verb == "rdn") res.out = rdn_cmd(o, res.err);
        else if (verb == "check-surface") res.out = check_surface_cmd(o);
        else if (verb == "labs") res.out = labs_cmd(o);
        else if (verb == "validate") res.out = validate_cmd(o, res.status);
    } catch (const UsageError& e) {
        res.status = 1;
        res.err += std::string("usage error: ") + e.what() + "\n";
    } catch (const DomainError& e) {
        res.status = 1;
        res.err += std::string("error: ") + e.what() + "\n";
    } catch (const CrossCheckError& e) {
        res.status = 2;
        res.err += std::string("cross-check failed: ") + e.what() + "\n";
    }
    return res;
}

}  // namespace anloc::cli
