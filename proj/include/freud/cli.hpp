#pragma once

#include <complex>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "freud/freud.hpp"

namespace freud::cli {

using nlohmann::json;

// Exit code contract: 0 success, 1 argument error, 2 numerical tolerance
// failure. Argument problems are thrown as std::invalid_argument by the
// front end; everything numeric lands here.

struct RunConfig {
    int digits = 80;
    int n_max = 12;
    double t = 1.0;
    double M = 0.0;
    int n = 4;
    int m = 2;
    double t0 = 0.5;
    double t1 = 1.0;
    int steps = 100;
    std::string family = "freud";
    std::string format = "csv";  // csv | json
    bool corrupt = false;        // self-test hook: breaks one coefficient in `suite`

    double tol_table = 1e-3;
    double tol_string = 1e-10;
    double tol_toda = 1e-5;
    double tol_structure = 1e-9;
    double tol_ladder = 1e-8;
    double tol_ode = 1e-7;
    double tol_table2 = 1e-8;
    double tol_electro = 1e-6;
    double tol_motion = 1e-5;
    double tol_motion_q = 1e-4;
    double tol_limit = 1e-4;
    double tol_rate = 1e-2;

    PrecisionConfig precision() const { return PrecisionConfig{digits, 0}; }
};

inline void validate(const RunConfig& cfg) {
    if (cfg.digits < 30) throw std::invalid_argument("--digits must be >= 30");
    if (cfg.n_max < 2) throw std::invalid_argument("--n-max must be >= 2");
    if (cfg.t < 0) throw std::invalid_argument("--t must be >= 0");
    if (cfg.M < 0) throw std::invalid_argument("--M must be >= 0");
    if (cfg.format != "csv" && cfg.format != "json")
        throw std::invalid_argument("--format must be csv or json");
    if (cfg.family != "freud" && cfg.family != "uvarov" && cfg.family != "christoffel2")
        throw std::invalid_argument("--family must be freud, uvarov or christoffel2");
}

namespace detail {

inline std::string fmt(double v, int prec = 12) {
    std::ostringstream os;
    os << std::setprecision(prec) << v;
    return os.str();
}

inline std::string fmt(const Real& v, int prec = 12) { return fmt(to_double(v), prec); }

}  // namespace detail

// ---------------------------------------------------------------------------
// recurrence: CSV n, a_sq, zeta, string_residual
// ---------------------------------------------------------------------------
inline int cmd_recurrence(std::ostream& out, const RunConfig& cfg) {
    validate(cfg);
    const RecurrenceTable& tab = recurrence_cache(Real(cfg.t), cfg.n_max, cfg.precision());
    out << "n,a_sq,zeta,string_residual\n";
    for (int n = 0; n <= cfg.n_max; ++n) {
        out << n << ',' << detail::fmt(tab.a_sq[n], 17) << ',' << detail::fmt(tab.zeta[n], 17)
            << ',';
        if (n >= 1 && n <= cfg.n_max - 1) out << detail::fmt(string_residual(tab, n), 3);
        out << '\n';
    }
    return 0;
}

// ---------------------------------------------------------------------------
// moments: CSV j, mu_2j
// ---------------------------------------------------------------------------
inline int cmd_moments(std::ostream& out, const RunConfig& cfg) {
    validate(cfg);
    MomentTable mt = compute_moments(Real(cfg.t), std::max(cfg.n, 2), cfg.precision());
    out << "j,mu_2j\n";
    for (std::size_t j = 0; j < mt.mu.size(); ++j)
        out << j << ',' << detail::fmt(mt.mu[j], 17) << '\n';
    return 0;
}

// ---------------------------------------------------------------------------
// zeros: CSV k, zero  (or JSON array)
// ---------------------------------------------------------------------------
inline int cmd_zeros(std::ostream& out, const RunConfig& cfg) {
    validate(cfg);
    const RecurrenceTable& tab = recurrence_cache(Real(cfg.t), cfg.n_max, cfg.precision());
    ZeroSet zs;
    if (cfg.family == "freud")
        zs = zeros_F(cfg.n, tab);
    else if (cfg.family == "uvarov")
        zs = zeros_Q(cfg.n, UvarovParams{Real(cfg.t), Real(cfg.M)}, tab);
    else
        zs = zeros_F2(cfg.n, tab);

    if (cfg.format == "json") {
        json j;
        j["command"] = "zeros";
        j["params"] = {{"family", cfg.family}, {"n", cfg.n}, {"t", cfg.t}, {"M", cfg.M}};
        json vals = json::array();
        for (const Real& v : zs.values) vals.push_back(to_double(v));
        j["results"] = {{"zeros", vals}};
        j["residuals"] = json::object();
        j["pass"] = true;
        out << j.dump(2) << '\n';
    } else {
        out << "k,zero\n";
        for (std::size_t k = 0; k < zs.values.size(); ++k)
            out << k + 1 << ',' << detail::fmt(zs.values[k], 17) << '\n';
    }
    return 0;
}

// ---------------------------------------------------------------------------
// tables: recompute one of the reference tables (3..8)
// ---------------------------------------------------------------------------
inline int cmd_tables(int which, std::ostream& out, const RunConfig& cfg) {
    validate(cfg);
    const ReferenceTable& ref = reference_table(which);
    const int n = ref.degree;
    const int m = n / 2;
    const RecurrenceTable& tab =
        recurrence_cache(Real(ref.t), std::max(cfg.n_max, n + 2), cfg.precision());

    double worst = 0;
    out << "quantity,M,computed,reference,abs_diff\n";
    auto emit = [&](const std::string& what, double M, double computed, double reference) {
        double diff = std::abs(computed - reference);
        worst = std::max(worst, diff);
        out << what << ',' << detail::fmt(M, 6) << ',' << detail::fmt(computed, 10) << ','
            << detail::fmt(reference, 10) << ',' << detail::fmt(diff, 3) << '\n';
    };

    for (std::size_t col = 0; col < ref.masses.size(); ++col) {
        UvarovParams params{Real(ref.t), Real(ref.masses[col])};
        ZeroSet zq = zeros_Q(n, params, tab);
        // positive zeros, outermost first, matching the reference row order
        for (int row = 0; row < m; ++row) {
            double computed = to_double(zq.values[n - 1 - row]);
            emit("Q" + std::to_string(n) + "_zero" + std::to_string(row + 1), ref.masses[col],
                 computed, ref.q_rows[row][col]);
        }
        UPoly u = build_u(m, params, tab);
        // One representative per +- root pair, matched to the reference pair
        // by smallest combined deviation over the two assignments.
        std::complex<double> c1 = u.roots[0], c2 = u.roots[2];
        auto canon = [](std::complex<double> z) {
            return std::complex<double>(std::abs(z.real()), std::abs(z.imag()));
        };
        c1 = canon(c1);
        c2 = canon(c2);
        std::complex<double> r1 = canon(ref.u_rows[0][col]), r2 = canon(ref.u_rows[1][col]);
        double direct = std::max(std::abs(c1 - r1), std::abs(c2 - r2));
        double swapped = std::max(std::abs(c1 - r2), std::abs(c2 - r1));
        if (swapped < direct) std::swap(c1, c2);
        emit("u_root_pair1", ref.masses[col], c1.imag() != 0 ? c1.imag() : c1.real(),
             r1.imag() != 0 ? r1.imag() : r1.real());
        emit("u_root_pair2", ref.masses[col], c2.imag() != 0 ? c2.imag() : c2.real(),
             r2.imag() != 0 ? r2.imag() : r2.real());
        // Type flags where the four-real-roots row contradicts the stated
        // two-real-two-complex pattern (table 6, M = 0).
        bool all_real = c1.imag() == 0 && c2.imag() == 0;
        if (all_real)
            out << "# note: all four u roots real at M=" << detail::fmt(ref.masses[col], 6)
                << " (pattern claim does not hold here)\n";
    }
    out << "# max_abs_diff=" << detail::fmt(worst, 3) << " tolerance=" << detail::fmt(cfg.tol_table, 3)
        << '\n';
    return worst <= cfg.tol_table ? 0 : 2;
}

// ---------------------------------------------------------------------------
// figure1: CSV x, Q3, Q5, Q4_M0, Q4_M02, Q4_M06 on [-2,2], 400 rows, t = 1
// ---------------------------------------------------------------------------
inline int cmd_figure1(std::ostream& out, const RunConfig& cfg) {
    validate(cfg);
    const RecurrenceTable& tab = recurrence_cache(Real(1), std::max(cfg.n_max, 8), cfg.precision());
    UvarovParams m0{Real(1), Real(0)};
    UvarovParams m02{Real(1), Real(0.2)};
    UvarovParams m06{Real(1), Real(0.6)};
    out << "x,Q3,Q5,Q4_M0,Q4_M02,Q4_M06\n";
    const int rows = 400;
    for (int i = 0; i < rows; ++i) {
        Real x = Real(-2) + Real(4) * i / (rows - 1);
        out << detail::fmt(x, 10) << ',' << detail::fmt(eval_Q(3, x, m06, tab), 10) << ','
            << detail::fmt(eval_Q(5, x, m06, tab), 10) << ','
            << detail::fmt(eval_Q(4, x, m0, tab), 10) << ','
            << detail::fmt(eval_Q(4, x, m02, tab), 10) << ','
            << detail::fmt(eval_Q(4, x, m06, tab), 10) << '\n';
    }
    return 0;
}

// ---------------------------------------------------------------------------
// electro: JSON report for one (m, t, M)
// ---------------------------------------------------------------------------
inline int cmd_electro(std::ostream& out, const RunConfig& cfg) {
    validate(cfg);
    UvarovParams params{Real(cfg.t), Real(cfg.M)};
    const RecurrenceTable& tab =
        recurrence_cache(Real(cfg.t), std::max(cfg.n_max, 2 * cfg.m + 2), cfg.precision());
    UPoly u = build_u(cfg.m, params, tab);
    EquilibriumReport rep = equilibrium_residual(cfg.m, params, tab);

    json j;
    j["command"] = "electro";
    j["params"] = {{"m", cfg.m}, {"t", cfg.t}, {"M", cfg.M}, {"digits", cfg.digits}};
    json roots = json::array();
    for (const auto& r : u.roots) roots.push_back({{"re", r.real()}, {"im", r.imag()}});
    json resid = json::array();
    for (const Real& e : rep.residuals) resid.push_back(to_double(e));
    j["results"] = {{"u_coeffs", {{"c4", to_double(u.c4)}, {"c2", to_double(u.c2)}, {"c0", to_double(u.c0)}}},
                    {"u_roots", roots},
                    {"equilibrium_residuals", resid}};
    j["residuals"] = {{"equilibrium_max", to_double(rep.max_abs)}};
    bool pass = rep.max_abs <= Real(cfg.tol_electro);
    j["pass"] = pass;
    out << j.dump(2) << '\n';
    return pass ? 0 : 2;
}

// ---------------------------------------------------------------------------
// ode-check: JSON coefficient vectors and residual statistics
// ---------------------------------------------------------------------------
inline int cmd_ode_check(std::ostream& out, const RunConfig& cfg) {
    validate(cfg);
    UvarovParams params{Real(cfg.t), Real(cfg.M)};
    const RecurrenceTable& tab =
        recurrence_cache(Real(cfg.t), std::max(cfg.n_max, cfg.n + 2), cfg.precision());
    OdeCoeffs ode = build_ode(cfg.n, params, tab);
    OdeCoeffs closed = table_ode_coeffs(cfg.n, params, tab);

    auto coeff_json = [](const LaurentPoly& p) {
        json arr = json::array();
        for (const auto& [e, c] : p.items()) arr.push_back({{"power", e}, {"coeff", to_double(c)}});
        return arr;
    };

    Real max_resid = 0, max_table_diff = 0;
    for (int i = 0; i < 25; ++i) {
        Real x = Real(-2) + Real(4) * (2 * i + 1) / 50;
        if (abs(x) < Real(1e-3)) continue;
        Real r = ode_residual(ode, x, params, tab);
        if (r > max_resid) max_resid = r;
    }
    for (const auto& [e, c] : ode.A.items()) {
        Real d = abs(c - closed.A.coeff(e)) / (abs(c) + Real(1e-30));
        if (d > max_table_diff) max_table_diff = d;
    }
    for (const auto& [e, c] : ode.B.items()) {
        Real d = abs(c - closed.B.coeff(e)) / (abs(c) + Real(1e-30));
        if (d > max_table_diff) max_table_diff = d;
    }

    json j;
    j["command"] = "ode-check";
    j["params"] = {{"n", cfg.n}, {"t", cfg.t}, {"M", cfg.M}, {"digits", cfg.digits}};
    j["results"] = {{"A", coeff_json(ode.A)},
                    {"B", coeff_json(ode.B)},
                    {"C", coeff_json(ode.C)},
                    {"wronskian_sign", ode.wronskian_sign},
                    {"closed_form_max_rel_diff", to_double(max_table_diff)}};
    j["residuals"] = {{"ode_max", to_double(max_resid)}};
    // The closed-form comparison gates only even degrees; the any-parity
    // closed form deviates in one coefficient (see the test suite) and is
    // reported, not enforced.
    bool pass = max_resid <= Real(cfg.tol_ode) &&
                (cfg.n % 2 == 1 || max_table_diff <= Real(cfg.tol_table2));
    j["pass"] = pass;
    out << j.dump(2) << '\n';
    return pass ? 0 : 2;
}

// ---------------------------------------------------------------------------
// motion: CSV trajectory t, y_1..y_n
// ---------------------------------------------------------------------------
inline int cmd_motion(std::ostream& out, const RunConfig& cfg) {
    validate(cfg);
    if (cfg.family == "christoffel2")
        throw std::invalid_argument("motion: family must be freud or uvarov");
    Family fam = cfg.family == "freud" ? Family::freud : Family::uvarov;
    Trajectory traj = integrate_motion(cfg.n, fam, UvarovParams{Real(cfg.t0), Real(cfg.M)},
                                       Real(cfg.t0), Real(cfg.t1), cfg.steps, cfg.precision());
    out << "t";
    for (int k = 1; k <= cfg.n; ++k) out << ",y_" << k;
    out << '\n';
    for (std::size_t r = 0; r < traj.times.size(); ++r) {
        out << detail::fmt(traj.times[r], 10);
        for (const Real& v : traj.zeros[r]) out << ',' << detail::fmt(v, 12);
        out << '\n';
    }
    return 0;
}

// ---------------------------------------------------------------------------
// suite: every residual family, JSON summary
// ---------------------------------------------------------------------------
inline int cmd_suite(std::ostream& out, const RunConfig& cfg) {
    validate(cfg);
    PrecisionConfig pc = cfg.precision();
    json results = json::array();
    json residuals = json::object();
    bool all_pass = true;
    auto record = [&](const std::string& name, const Real& max_resid, double tol) {
        bool pass = max_resid <= Real(tol);
        all_pass = all_pass && pass;
        results.push_back({{"suite", name},
                           {"max_residual", to_double(max_resid)},
                           {"tolerance", tol},
                           {"pass", pass}});
        residuals[name] = to_double(max_resid);
    };

    const std::vector<double> t_grid{0.5, 1.0, 2.0};
    const std::vector<double> M_grid{0.0, 0.5, 5.0};
    const int string_top = std::min(cfg.n_max, 30);

    {
        Real worst = 0;
        for (double t : t_grid) {
            const RecurrenceTable& tab = recurrence_cache(Real(t), string_top + 1, pc);
            for (int n = 1; n <= string_top; ++n) {
                Real r = string_residual(tab, n);
                if (cfg.corrupt && n == 3 && t == 1.0) r += Real("1e-3");
                if (r > worst) worst = r;
            }
        }
        record("string", worst, cfg.tol_string);
    }
    {
        Real worst = 0;
        for (int k = 1; k <= 10; ++k) {
            Real r = toda_residual(Real(1), Real("1e-3"), k, pc);
            if (r > worst) worst = r;
        }
        record("toda", worst, cfg.tol_toda);
    }
    {
        const RecurrenceTable& tab = recurrence_cache(Real(1), std::max(cfg.n_max, 12), pc);
        Real worst = 0;
        for (int n = 1; n <= 10; ++n) {
            for (int i = 0; i < 20; ++i) {
                Real x = Real(-19) / 10 + Real(2 * i) / 10;
                Real a = -4 * tab.a_sq[n] * x;
                Real b = 4 * tab.a_sq[n] * (x * x - tab.t + tab.a_sq[n] + tab.a_sq[n + 1]);
                Real scale = abs(eval_F_prime(n, x, tab)) + abs(a * eval_F(n, x, tab)) +
                             abs(b * eval_F(n - 1, x, tab)) + Real(1e-30);
                Real r = structure_relation_residual(n, x, tab) / scale;
                if (r > worst) worst = r;
            }
        }
        record("structure", worst, cfg.tol_structure);
    }
    {
        Real worst_ladder = 0, worst_ode = 0, worst_t2 = 0;
        for (double t : t_grid) {
            const RecurrenceTable& tab = recurrence_cache(Real(t), std::max(cfg.n_max, 11), pc);
            for (double M : M_grid) {
                UvarovParams params{Real(t), Real(M)};
                for (int n = 2; n <= 9; ++n) {
                    OdeCoeffs ode = build_ode(n, params, tab);
                    for (int i = 0; i < 50; ++i) {
                        Real x = Real(-199) / 100 + Real(4 * i) / 50;
                        if (abs(x) < Real(1e-2)) continue;
                        Real r = ode_residual(ode, x, params, tab);
                        if (r > worst_ode) worst_ode = r;
                        if (i % 3 == 0) {
                            LadderResiduals lr = ladder_identity_residual(n, x, params, tab);
                            if (lr.lowering > worst_ladder) worst_ladder = lr.lowering;
                            if (lr.raising > worst_ladder) worst_ladder = lr.raising;
                        }
                    }
                    if (n % 2 == 0) {
                        OdeCoeffs closed = table_ode_coeffs(n, params, tab);
                        auto compare = [&](const LaurentPoly& built, const LaurentPoly& ref) {
                            for (const auto& [e, c] : built.items()) {
                                Real d = abs(c - ref.coeff(e)) / (abs(c) + Real(1e-30));
                                if (d > worst_t2) worst_t2 = d;
                            }
                        };
                        compare(ode.A, closed.A);
                        compare(ode.B, closed.B);
                    }
                }
            }
        }
        record("ladder", worst_ladder, cfg.tol_ladder);
        record("ode", worst_ode, cfg.tol_ode);
        record("ode-table2", worst_t2, cfg.tol_table2);
    }
    {
        Real worst = 0;
        for (double t : t_grid) {
            const RecurrenceTable& tab = recurrence_cache(Real(t), std::max(cfg.n_max, 9), pc);
            for (double M : {0.5, 5.0}) {
                for (int m : {2, 3}) {
                    EquilibriumReport rep = equilibrium_residual(m, UvarovParams{Real(t), Real(M)}, tab);
                    if (rep.max_abs > worst) worst = rep.max_abs;
                }
            }
        }
        record("electrostatic", worst, cfg.tol_electro);
    }
    {
        Trajectory traj = integrate_motion(4, Family::freud, UvarovParams{Real("0.5"), Real(0)},
                                           Real("0.5"), Real(1), 100, pc);
        const RecurrenceTable& tab = recurrence_cache(Real(1), 6, pc);
        ZeroSet direct = zeros_F(4, tab);
        Real worst = 0;
        for (int i = 0; i < 4; ++i) {
            Real d = abs(traj.zeros.back()[i] - direct.values[i]);
            if (d > worst) worst = d;
        }
        record("motion-endpoint", worst, cfg.tol_motion);

        const RecurrenceTable& tabq = recurrence_cache(Real(1), 8, pc);
        UvarovParams params{Real(1), Real("0.5")};
        ZeroSet y = zeros_Q(4, params, tabq);
        Real h("1e-3");
        const RecurrenceTable& up = recurrence_cache(Real(1) + h, 8, pc);
        const RecurrenceTable& dn = recurrence_cache(Real(1) - h, 8, pc);
        ZeroSet yu = zeros_Q(4, UvarovParams{Real(1) + h, Real("0.5")}, up);
        ZeroSet yd = zeros_Q(4, UvarovParams{Real(1) - h, Real("0.5")}, dn);
        Real worst_q = 0;
        for (int k = 0; k < 4; ++k) {
            Real fd = (yu.values[k] - yd.values[k]) / (2 * h);
            Real rhs = motion_rhs_Q(y.values[k], k, 4, params, tabq);
            if (abs(fd - rhs) > worst_q) worst_q = abs(fd - rhs);
        }
        record("motion-rhs-q", worst_q, cfg.tol_motion_q);
    }
    {
        const RecurrenceTable& tab = recurrence_cache(Real(1), std::max(cfg.n_max, 8), pc);
        std::vector<Real> grid{Real(0),  Real("0.002"), Real("0.05"), Real("0.5"), Real(5),
                               Real(10), Real(50),      Real("1e6"),  Real("1e8")};
        MonotonicReport rep = uvarov_monotonic_report(2, Real(1), grid, tab);
        record("monotonic-interlace", Real(rep.interlacing_ok && rep.monotone_ok ? 0 : 1), 0.5);
        record("monotonic-limit", rep.max_limit_gap, cfg.tol_limit);
        Real worst_rate = 0;
        for (const LimitRateEntry& e : rep.rates) {
            if (e.captured) continue;
            for (const auto& [M, prod] : e.observed) {
                if (M < 1e6) continue;
                Real rel = abs(prod - e.predicted) / abs(e.predicted);
                if (rel > worst_rate) worst_rate = rel;
            }
        }
        record("monotonic-rate", worst_rate, cfg.tol_rate);
    }

    json j;
    j["command"] = "suite";
    j["params"] = {{"digits", cfg.digits}, {"n_max", cfg.n_max}, {"corrupt", cfg.corrupt}};
    j["results"] = results;
    j["residuals"] = residuals;
    j["pass"] = all_pass;
    out << j.dump(2) << '\n';
    return all_pass ? 0 : 2;
}

}  // namespace freud::cli
