#include "clustervol/geometry.hpp"

#include "clustervol/errors.hpp"

#include <algorithm>
#include <cmath>
#include <initializer_list>

namespace clustervol {

namespace {

// Window-local operand: x_k of the input window (k > 0), x~_k of the output (k < 0), or x_c (0).
struct Window {
    std::span<const Complex> in;
    std::span<const Complex> out;
    Complex xc;

    LedgerFactor factor(int k, int power) const {
        if (k == 0) return {"xc", xc, power};
        if (k > 0) return {"x" + std::to_string(k), in[k - 1], power};
        return {"~x" + std::to_string(-k), out[-k - 1], power};
    }

    Ledger ledger(int sign, std::initializer_list<int> num, std::initializer_list<int> den) const {
        Ledger l;
        l.sign = sign;
        for (int k : num) l.factors.push_back(factor(k, 1));
        for (int k : den) l.factors.push_back(factor(k, -1));
        return l;
    }
};

struct TetrahedronRow {
    char label;
    int sign;
    Ledger z;
    Ledger w;
};

// Table of moduli: z and 1/(1-z) as signed quotients of window parameters.
std::array<TetrahedronRow, 4> table(const Window& w, int eps) {
    constexpr int c = 0;
    if (eps > 0)
        return {{{'N', -1, w.ledger(-1, {2, 6}, {3, 5}), w.ledger(1, {3, 5}, {4, c})},
                 {'S', -1, w.ledger(-1, {-3, -5}, {3, 5}), w.ledger(1, {3, 5}, {-4, c})},
                 {'W', 1, w.ledger(1, {2, -3}, {3, 5}), w.ledger(-1, {3, 5}, {1, c})},
                 {'E', 1, w.ledger(1, {-5, 6}, {3, 5}), w.ledger(-1, {3, 5}, {c, 7})}}};
    return {{{'N', 1, w.ledger(-1, {3, 5}, {2, 6}), w.ledger(1, {2, 6}, {4, c})},
             {'S', 1, w.ledger(-1, {-2, -6}, {2, 6}), w.ledger(1, {2, 6}, {c, -4})},
             {'W', -1, w.ledger(1, {-2, 3}, {2, 6}), w.ledger(-1, {2, 6}, {1, c})},
             {'E', -1, w.ledger(1, {5, -6}, {2, 6}), w.ledger(-1, {2, 6}, {c, 7})}}};
}

bool finite(Complex v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); }

// Rounds (log_sum - log value) / (pi i) and reports the distance to the integer.
long flattening_integer(const Ledger& l, Complex value, double& residual) {
    const Complex k = (l.log_sum() - principal_log(value)) / Complex(0.0, pi);
    const double r = std::round(k.real());
    residual = std::abs(k - r);
    return static_cast<long>(r);
}

void check_nondegenerate(const TetrahedronRow& row) {
    for (const Ledger* l : {&row.z, &row.w})
        for (const LedgerFactor& f : l->factors)
            if (f.value == 0.0 || !finite(f.value))
                throw DegenerateModulus(std::string("degenerate modulus: edge parameter ") +
                                        f.source + " of tetrahedron " + row.label +
                                        " is zero or not finite");
    const Complex z = row.z.value();
    if (z == 0.0 || z == 1.0 || !finite(z) || !finite(row.w.value()))
        throw DegenerateModulus(std::string("degenerate modulus: z of tetrahedron ") + row.label +
                                " is 0, 1 or not finite");
}

IdealTetrahedron make_tetrahedron(const TetrahedronRow& row) {
    IdealTetrahedron t;
    t.label = row.label;
    t.sign = row.sign;
    t.z_ledger = row.z;
    t.w_ledger = row.w;
    t.z = row.z.value();
    const Complex w = row.w.value();
    t.one_minus_z = 1.0 / w;
    const double mismatch = std::abs(t.z + t.one_minus_z - 1.0);
    if (mismatch > 1e-9 * std::max({1.0, std::abs(t.z), std::abs(t.one_minus_z)}))
        throw FlatteningError(mismatch, std::string("ledgers of tetrahedron ") + row.label +
                                            " disagree: z + 1/w - 1 = " +
                                            std::to_string(mismatch));
    t.p = flattening_integer(row.z, t.z, t.p_residual);
    t.q = flattening_integer(row.w, w, t.q_residual);
    const double worst = std::max(t.p_residual, t.q_residual);
    if (worst > flattening_tolerance)
        throw FlatteningError(worst, std::string("non-integral flattening for tetrahedron ") +
                                         row.label + ", residual " + std::to_string(worst));
    return t;
}

}  // namespace

Complex Ledger::value() const {
    Complex v = static_cast<double>(sign);
    for (const LedgerFactor& f : factors) v = f.power > 0 ? v * f.value : v / f.value;
    return v;
}

Complex Ledger::log_sum() const {
    Complex s = 0.0;
    for (const LedgerFactor& f : factors) s += static_cast<double>(f.power) * principal_log(f.value);
    return s;
}

Complex IdealTetrahedron::rogers() const { return extended_rogers(z, one_minus_z, p, q); }

double IdealTetrahedron::signed_volume() const { return sign * bloch_wigner(z, one_minus_z); }

CrossingOctahedron build_octahedron(std::span<const Complex> x_in, std::span<const Complex> x_out,
                                    Complex xc, int sign) {
    if (x_in.size() != 7 || x_out.size() != 7)
        throw InvalidArgument("octahedron windows must have 7 entries");
    if (sign != 1 && sign != -1) throw InvalidArgument("braid sign must be +1 or -1");
    CrossingOctahedron oct;
    oct.sign = sign;
    std::copy(x_in.begin(), x_in.end(), oct.x_in.begin());
    std::copy(x_out.begin(), x_out.end(), oct.x_out.begin());
    oct.xc = xc;
    const Window w{x_in, x_out, xc};
    const auto rows = table(w, sign);
    for (const TetrahedronRow& row : rows) check_nondegenerate(row);
    for (std::size_t t = 0; t < 4; ++t) oct.tetrahedra[t] = make_tetrahedron(rows[t]);
    return oct;
}

Complex crossing_dilog(const CrossingOctahedron& oct) {
    Complex s = 0.0;
    for (const IdealTetrahedron& t : oct.tetrahedra) s += static_cast<double>(t.sign) * t.rogers();
    return s;
}

double crossing_bloch_wigner(const CrossingOctahedron& oct) {
    double s = 0.0;
    for (const IdealTetrahedron& t : oct.tetrahedra) s += t.signed_volume();
    return s;
}

double reduce_mod_pi_sq(double v) {
    double r = v - pi_sq * std::round(v / pi_sq);
    if (r <= -pi_sq / 2) r += pi_sq;
    if (r > pi_sq / 2) r -= pi_sq;
    return r;
}

VolumeResult complex_volume(const ClusterTrajectory<Complex>& traj) {
    VolumeResult result;
    const auto& letters = traj.braid.letters;
    for (std::size_t j = 0; j < letters.size(); ++j) {
        const int step = static_cast<int>(j) + 1;
        const int o = 3 * letters[j].generator - 3;
        const std::span<const Complex> in(traj.seeds[j].data() + o, 7);
        const std::span<const Complex> out(traj.seeds[j + 1].data() + o, 7);
        try {
            CrossingOctahedron oct = build_octahedron(in, out, traj.central[j], letters[j].sign);
            oct.step = step;
            oct.generator = letters[j].generator;
            result.total += crossing_dilog(oct);
            result.bloch_wigner += crossing_bloch_wigner(oct);
            for (const IdealTetrahedron& t : oct.tetrahedra)
                result.max_flattening_residual =
                    std::max({result.max_flattening_residual, t.p_residual, t.q_residual});
            result.crossings.push_back(std::move(oct));
        } catch (DegenerateModulus& e) {
            e.crossing = step;
            throw;
        } catch (FlatteningError& e) {
            e.crossing = step;
            throw;
        }
    }
    result.vol = result.total.imag();
    result.cs = -result.total.real();
    result.cs_reduced = reduce_mod_pi_sq(result.cs);
    return result;
}

}  // namespace clustervol
