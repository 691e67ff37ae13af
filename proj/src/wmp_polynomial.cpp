#include "wmp/wmp_polynomial.hpp"

#include "wmp/errors.hpp"

#include <algorithm>
#include <utility>

namespace wmp {

namespace {

void trim_coeffs(std::vector<QMatrix>& c) {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
}

long deg0(long d) { return std::max(0L, d); }

long raw_conv(std::size_t la, std::size_t lb) {
    return (la == 0 || lb == 0) ? 0 : static_cast<long>(la + lb - 1);
}

void log_capacity(PolyPartitionState& st, const char* name, long raw, long cap) {
    if (st.capacity_log) st.capacity_log->push_back({name, st.i, raw, cap});
}

} // namespace

// ---------------------------------------------------------------------------
// PolyMatrix

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, std::vector<QMatrix> coeffs)
    : rows_(rows), cols_(cols), coeffs_(std::move(coeffs)) {
    for (const auto& c : coeffs_)
        if (c.rows() != rows_ || c.cols() != cols_) throw DimensionError("coefficient matrices differ in shape");
    trim_coeffs(coeffs_);
}

PolyMatrix PolyMatrix::constant(const QMatrix& c) { return PolyMatrix(c.rows(), c.cols(), {c}); }

PolyMatrix PolyMatrix::identity(std::size_t n) { return constant(QMatrix::identity(n)); }

PolyMatrix PolyMatrix::scalar(const UniPoly& p) {
    std::vector<QMatrix> c;
    c.reserve(p.size());
    for (const auto& v : p.coeffs()) {
        QMatrix q(1, 1);
        q(0, 0) = v;
        c.push_back(std::move(q));
    }
    return PolyMatrix(1, 1, std::move(c));
}

QMatrix PolyMatrix::coeff(std::size_t j) const {
    return j < coeffs_.size() ? coeffs_[j] : QMatrix(rows_, cols_);
}

UniPoly PolyMatrix::entry(std::size_t r, std::size_t c) const {
    std::vector<BigRational> v;
    v.reserve(coeffs_.size());
    for (const auto& m : coeffs_) v.push_back(m(r, c));
    return UniPoly(std::move(v));
}

PolyMatrix PolyMatrix::transpose() const {
    PolyMatrix t(cols_, rows_);
    t.coeffs_.reserve(coeffs_.size());
    for (const auto& m : coeffs_) t.coeffs_.push_back(m.transpose());
    return t;
}

PolyMatrix PolyMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw IndexError("block out of range");
    std::vector<QMatrix> out;
    out.reserve(coeffs_.size());
    for (const auto& m : coeffs_) {
        QMatrix b(nr, nc);
        for (std::size_t r = 0; r < nr; ++r)
            for (std::size_t c = 0; c < nc; ++c) b(r, c) = m(r0 + r, c0 + c);
        out.push_back(std::move(b));
    }
    return PolyMatrix(nr, nc, std::move(out));
}

bool PolyMatrix::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (const auto& m : coeffs_)
        if (!(m == m.transpose())) return false;
    return true;
}

PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("matrix polynomial add: shapes differ");
    std::vector<QMatrix> out(std::max(a.size(), b.size()), QMatrix(a.rows_, a.cols_));
    for (std::size_t j = 0; j < a.size(); ++j) out[j] += a.coeffs_[j];
    for (std::size_t j = 0; j < b.size(); ++j) out[j] += b.coeffs_[j];
    return PolyMatrix(a.rows_, a.cols_, std::move(out));
}

PolyMatrix PolyMatrix::operator-() const {
    PolyMatrix r = *this;
    for (auto& m : r.coeffs_) m = BigRational(-1) * m;
    return r;
}

PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b) { return a + (-b); }

namespace {

void check_conv(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.cols() != b.rows())
        throw DimensionError("matrix polynomial product: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                             " * " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
}

QMatrix conv_coeff(const PolyMatrix& a, const PolyMatrix& b, std::size_t j) {
    QMatrix acc(a.rows(), b.cols());
    const std::size_t lo = j + 1 > b.size() ? j + 1 - b.size() : 0;
    const std::size_t hi = std::min(j, a.size() - 1);
    for (std::size_t k = lo; k <= hi; ++k) {
        const QMatrix& x = a.coeffs()[k];
        const QMatrix& y = b.coeffs()[j - k];
        if (x.is_zero() || y.is_zero()) continue;
        acc += x * y;
    }
    return acc;
}

} // namespace

PolyMatrix conv_serial(const PolyMatrix& a, const PolyMatrix& b) {
    check_conv(a, b);
    if (a.is_zero() || b.is_zero()) return PolyMatrix(a.rows(), b.cols());
    std::vector<QMatrix> out(a.size() + b.size() - 1);
    for (std::size_t j = 0; j < out.size(); ++j) out[j] = conv_coeff(a, b, j);
    return PolyMatrix(a.rows(), b.cols(), std::move(out));
}

PolyMatrix conv(const PolyMatrix& a, const PolyMatrix& b) {
    check_conv(a, b);
    if (a.is_zero() || b.is_zero()) return PolyMatrix(a.rows(), b.cols());
    const long len = static_cast<long>(a.size() + b.size() - 1);
    std::vector<QMatrix> out(static_cast<std::size_t>(len));
#pragma omp parallel for schedule(dynamic) if (len > 2)
    for (long j = 0; j < len; ++j) out[static_cast<std::size_t>(j)] = conv_coeff(a, b, static_cast<std::size_t>(j));
    return PolyMatrix(a.rows(), b.cols(), std::move(out));
}

PolyMatrix conv(const UniPoly& p, const PolyMatrix& a) {
    if (p.is_zero() || a.is_zero()) return PolyMatrix(a.rows(), a.cols());
    std::vector<QMatrix> out(p.size() + a.size() - 1, QMatrix(a.rows(), a.cols()));
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (sgn(p.coeffs()[i]) == 0) continue;
        for (std::size_t k = 0; k < a.size(); ++k) out[i + k] += p.coeffs()[i] * a.coeffs()[k];
    }
    return PolyMatrix(a.rows(), a.cols(), std::move(out));
}

PolyMatrix vstack(const PolyMatrix& top, const PolyMatrix& bottom) {
    if (top.cols() != bottom.cols()) throw DimensionError("vstack: column counts differ");
    const std::size_t len = std::max(top.size(), bottom.size());
    std::vector<QMatrix> out;
    out.reserve(len);
    for (std::size_t j = 0; j < len; ++j) {
        QMatrix t = top.coeff(j), b = bottom.coeff(j);
        QMatrix m(top.rows() + bottom.rows(), top.cols());
        for (std::size_t r = 0; r < top.rows(); ++r)
            for (std::size_t c = 0; c < top.cols(); ++c) m(r, c) = t(r, c);
        for (std::size_t r = 0; r < bottom.rows(); ++r)
            for (std::size_t c = 0; c < top.cols(); ++c) m(top.rows() + r, c) = b(r, c);
        out.push_back(std::move(m));
    }
    return PolyMatrix(top.rows() + bottom.rows(), top.cols(), std::move(out));
}

UniPoly as_scalar(const PolyMatrix& a) {
    if (a.rows() != 1 || a.cols() != 1) throw DimensionError("expected a 1x1 matrix polynomial");
    return a.entry(0, 0);
}

PolyMatrix from_rf_matrix(const RfMatrix& a) {
    std::size_t len = 0;
    std::vector<UniPoly> polys;
    polys.reserve(a.entries().size());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) {
            const RatFun& f = a(r, c);
            if (!f.is_polynomial())
                throw InvalidInput("entry (" + std::to_string(r + 1) + "," + std::to_string(c + 1) +
                                   ") is not a polynomial: " + to_string(f));
            polys.push_back(f.as_polynomial());
            len = std::max(len, polys.back().size());
        }
    std::vector<QMatrix> coeffs(len, QMatrix(a.rows(), a.cols()));
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) {
            const UniPoly& p = polys[r * a.cols() + c];
            for (std::size_t j = 0; j < p.size(); ++j) coeffs[j](r, c) = p.coeffs()[j];
        }
    return PolyMatrix(a.rows(), a.cols(), std::move(coeffs));
}

RfMatrix to_rf_matrix(const PolyMatrix& a) {
    RfMatrix out(a.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = RatFun(a.entry(r, c));
    return out;
}

RfMatrix MatrixPolyFraction::to_rf() const {
    RfMatrix out(num.rows(), num.cols());
    for (std::size_t r = 0; r < num.rows(); ++r)
        for (std::size_t c = 0; c < num.cols(); ++c) out(r, c) = RatFun::make(num.entry(r, c), den);
    return out;
}

MatrixPolyFraction fraction_simplify(const PolyMatrix& z, const UniPoly& y) {
    if (y.is_zero()) throw ZeroDivision("matrix fraction with zero denominator");
    BigRational scale;
    IntPoly g = ipoly::from_rational(y, scale);
    for (std::size_t r = 0; r < z.rows() && g.size() > 1; ++r)
        for (std::size_t c = 0; c < z.cols() && g.size() > 1; ++c) {
            UniPoly e = z.entry(r, c);
            if (e.is_zero()) continue;
            BigRational unused;
            g = ipoly::gcd(g, ipoly::from_rational(e, unused));
        }

    PolyMatrix num = z;
    UniPoly den = y;
    if (g.size() > 1) {
        const UniPoly gp = UniPoly::from_int(g);
        den = poly_divmod(y, gp).first;
        std::vector<QMatrix> coeffs(z.size(), QMatrix(z.rows(), z.cols()));
        for (std::size_t r = 0; r < z.rows(); ++r)
            for (std::size_t c = 0; c < z.cols(); ++c) {
                UniPoly q = poly_divmod(z.entry(r, c), gp).first;
                for (std::size_t j = 0; j < q.size(); ++j) coeffs[j](r, c) = q.coeffs()[j];
            }
        num = PolyMatrix(z.rows(), z.cols(), std::move(coeffs));
    }
    IntPoly den_int = ipoly::from_rational(den, scale);
    const BigRational inv_scale = 1 / scale;
    std::vector<QMatrix> coeffs;
    coeffs.reserve(num.size());
    for (const auto& m : num.coeffs()) coeffs.push_back(inv_scale * m);
    return {PolyMatrix(num.rows(), num.cols(), std::move(coeffs)), UniPoly::from_int(den_int)};
}

// ---------------------------------------------------------------------------
// Problem and bounds

PolyProblem::PolyProblem(PolyMatrix a, PolyMatrix m_weight, PolyMatrix n_weight)
    : a_(std::move(a)), m_(std::move(m_weight)), n_(std::move(n_weight)) {
    if (a_.rows() == 0 || a_.cols() == 0) throw DimensionError("matrix A is empty");
    if (m_.rows() != a_.rows() || m_.cols() != a_.rows())
        throw DimensionError("weight M must be " + std::to_string(a_.rows()) + "x" + std::to_string(a_.rows()));
    if (n_.rows() != a_.cols() || n_.cols() != a_.cols())
        throw DimensionError("weight N must be " + std::to_string(a_.cols()) + "x" + std::to_string(a_.cols()));
    if (!m_.is_symmetric()) throw InvalidInput("weight M is not symmetric");
    if (!n_.is_symmetric()) throw InvalidInput("weight N is not symmetric");
}

PolyProblem PolyProblem::unweighted(PolyMatrix a) {
    const std::size_t m = a.rows(), n = a.cols();
    return PolyProblem(std::move(a), PolyMatrix::identity(m), PolyMatrix::identity(n));
}

long PolyBounds::q_hat() const { return std::max(p_prev, q_prev + q); }
long PolyBounds::d_cap() const { return q_prev + q; }
long PolyBounds::c_cap() const { return q_hat() + q; }
long PolyBounds::phi_cap() const { return q_hat() + nbar_q + n_q; }
long PolyBounds::psi_cap() const { return p_prev + ndbar_q; }
long PolyBounds::delta_bar_cap() const { return 2 * p_prev + ndbar_q; }
long PolyBounds::delta_dbar_cap() const { return 2 * q_hat() + n_q + std::max(n_q + nbar_q, ndbar_q); }

long PolyBounds::b_bar(bool c_zero) const {
    if (c_zero) return 2 * p_prev + ndbar_q + q_prev + q_hat() + n_q;
    return q_hat() + q + p_prev + m_q;
}

long PolyBounds::b_dbar(bool c_zero) const {
    if (c_zero) return delta_dbar_cap() + 2 * p_prev;
    return 2 * q_hat() + 2 * q + m_q;
}

long PolyBounds::q_i(bool c_zero) const {
    return q_hat() + q + std::max(nbar_q + n_q, ndbar_q) + std::max(b_bar(c_zero), b_dbar(c_zero));
}

long PolyBounds::p_i(bool c_zero) const { return p_prev + ndbar_q + b_dbar(c_zero); }

// ---------------------------------------------------------------------------
// Algorithm steps

ZYPair poly_init_ZY(const PolyMatrix& a1, const PolyMatrix& m_weight) {
    if (a1.cols() != 1) throw DimensionError("poly_init_ZY expects a single column");
    PolyMatrix a1t = a1.transpose();
    if (a1.is_zero()) return {a1t, UniPoly{1}};
    PolyMatrix z = conv(a1t, m_weight);
    UniPoly y = as_scalar(conv(z, a1));
    return {std::move(z), std::move(y)};
}

PolyMatrix poly_step_d(PolyPartitionState& st, const PolyMatrix& a_i) {
    st.d = conv(st.z, a_i);
    log_capacity(st, "d", raw_conv(st.z.size(), a_i.size()), st.bounds.d_cap());
    return st.d;
}

PolyMatrix poly_step_c(PolyPartitionState& st, const PolyMatrix& a_i, const PolyMatrix& a_prefix) {
    st.c = conv(st.y, a_i) - conv(a_prefix, st.d);
    log_capacity(st, "c", std::max(raw_conv(st.y.size(), a_i.size()), raw_conv(a_prefix.size(), st.d.size())),
                 st.bounds.c_cap());
    return st.c;
}

PhiPsi poly_step_phi_psi(PolyPartitionState& st, const PolyProblem& problem) {
    const std::size_t i = st.i;
    const PolyMatrix a_prefix = problem.a().block(0, 0, problem.rows(), i - 1);
    const PolyMatrix l = problem.n_weight().block(0, i - 1, i - 1, 1);
    const PolyMatrix proj = conv(st.y, PolyMatrix::identity(i - 1)) - conv(st.z, a_prefix);
    const PolyMatrix nbar_l = conv(st.ninv.num, l);
    st.phi = conv(proj, nbar_l);
    st.psi = st.y * st.ninv.den;

    const long proj_len = std::max(static_cast<long>(st.y.size()), raw_conv(st.z.size(), a_prefix.size()));
    log_capacity(st, "phi", raw_conv(static_cast<std::size_t>(proj_len), static_cast<std::size_t>(raw_conv(st.ninv.num.size(), l.size()))),
                 st.bounds.phi_cap());
    log_capacity(st, "psi", raw_conv(st.y.size(), st.ninv.den.size()), st.bounds.psi_cap());
    return {st.phi, st.psi};
}

namespace {

std::size_t len(const UniPoly& p) { return p.size(); }
std::size_t len(const PolyMatrix& p) { return p.size(); }

long raw3(std::size_t a, std::size_t b, std::size_t c) {
    return raw_conv(static_cast<std::size_t>(raw_conv(a, b)), c);
}

PolyMatrix hstack(const PolyMatrix& left, const PolyMatrix& right) {
    return vstack(left.transpose(), right.transpose()).transpose();
}

std::string stage_str(std::size_t i) { return "stage " + std::to_string(i); }

} // namespace

VWPair poly_step_VW(PolyPartitionState& st, const PolyProblem& problem) {
    const std::size_t i = st.i;
    st.c_zero = st.c.is_zero();
    if (!st.c_zero) {
        const PolyMatrix ct_m = conv(st.c.transpose(), problem.m_weight());
        st.v = conv(st.y, ct_m);
        st.w = as_scalar(conv(ct_m, st.c));
        log_capacity(st, "V", raw3(len(st.y), len(st.c), len(problem.m_weight())), st.bounds.b_bar(false));
        log_capacity(st, "W", raw3(len(st.c), len(problem.m_weight()), len(st.c)), st.bounds.b_dbar(false));
        if (st.w.is_zero()) throw DegenerateWeightError("c* M c vanishes identically at " + stage_str(i), i);
        return {st.v, st.w};
    }

    const PolyMatrix n_prev = problem.n_weight().block(0, 0, i - 1, i - 1);
    const PolyMatrix l = problem.n_weight().block(0, i - 1, i - 1, 1);
    const PolyMatrix lt = l.transpose();
    const UniPoly n_ii = problem.n_weight().entry(i - 1, i - 1);
    const PolyMatrix dt = st.d.transpose();
    const UniPoly& ndbar = st.ninv.den;
    const UniPoly y2 = st.y * st.y;

    const PolyMatrix dt_n = conv(dt, n_prev);
    const UniPoly dnd = as_scalar(conv(dt_n, st.d));
    const UniPoly cross = as_scalar(conv(dt, l)) + as_scalar(conv(lt, st.d));
    const UniPoly l_phi = as_scalar(conv(lt, st.phi));
    st.delta_bar = y2 * ndbar;
    st.delta_dbar = (n_ii * y2 + dnd - cross * st.y) * ndbar - l_phi * st.y;

    const long y2_raw = raw_conv(len(st.y), len(st.y));
    const long inner_raw = std::max({raw_conv(len(n_ii), static_cast<std::size_t>(y2_raw)),
                                     raw3(len(dt), len(n_prev), len(st.d)),
                                     raw3(len(dt), len(l), len(st.y))});
    const long dd_raw = std::max(raw_conv(static_cast<std::size_t>(inner_raw), len(ndbar)),
                                 raw3(len(lt), len(st.phi), len(st.y)));
    log_capacity(st, "delta_bar", raw_conv(static_cast<std::size_t>(y2_raw), len(ndbar)), st.bounds.delta_bar_cap());
    log_capacity(st, "delta_dbar", dd_raw, st.bounds.delta_dbar_cap());
    if (st.delta_dbar.is_zero()) throw DegenerateWeightError("delta vanishes identically at " + stage_str(i), i);

    const PolyMatrix row = dt_n - conv(st.y, lt);
    st.v = conv(st.delta_bar, conv(row, st.z));
    st.w = st.delta_dbar * y2;
    const long row_raw = std::max(raw_conv(len(dt), len(n_prev)), raw_conv(len(lt), len(st.y)));
    log_capacity(st, "V", raw3(len(st.delta_bar), static_cast<std::size_t>(row_raw), len(st.z)), st.bounds.b_bar(true));
    log_capacity(st, "W", raw_conv(len(st.delta_dbar), static_cast<std::size_t>(y2_raw)), st.bounds.b_dbar(true));
    return {st.v, st.w};
}

ZYPair poly_step_ZY(PolyPartitionState& st) {
    const UniPoly& ndbar = st.ninv.den;
    st.theta = conv(ndbar * st.w, st.z) - conv(ndbar, conv(st.d, st.v)) - conv(st.phi, st.v);
    const PolyMatrix bottom = conv(st.psi, st.v);
    const long theta_raw = std::max({raw3(len(st.z), len(ndbar), len(st.w)), raw3(len(st.d), len(ndbar), len(st.v)),
                                     raw_conv(len(st.phi), len(st.v))});
    log_capacity(st, "Z", std::max(theta_raw, raw_conv(len(st.psi), len(st.v))), st.bounds.q_i(st.c_zero));
    log_capacity(st, "Y", raw_conv(len(st.psi), len(st.w)), st.bounds.p_i(st.c_zero));
    MatrixPolyFraction next = fraction_simplify(vstack(st.theta, bottom), st.psi * st.w);
    return {std::move(next.num), std::move(next.den)};
}

namespace {

long max_degree(const PolyMatrix& p) { return deg0(p.degree()); }
long max_degree(const UniPoly& p) { return deg0(p.degree()); }

MatrixPolyFraction first_block_inverse(const PolyMatrix& n_weight) {
    const UniPoly n11 = n_weight.entry(0, 0);
    if (n11.is_zero()) throw SingularityError("leading principal submatrix N_1 is singular", 1);
    return fraction_simplify(PolyMatrix::identity(1), n11);
}

// N_i^{-1} from N_{i-1}^{-1} = nbar / ndbar.
MatrixPolyFraction next_block_inverse(const MatrixPolyFraction& prev, const PolyMatrix& n_weight, std::size_t i,
                                      std::vector<CapacityRecord>* log) {
    const PolyMatrix l = n_weight.block(0, i - 1, i - 1, 1);
    const PolyMatrix lt = l.transpose();
    const UniPoly n_ii = n_weight.entry(i - 1, i - 1);
    const PolyMatrix& nbar = prev.num;
    const UniPoly& ndbar = prev.den;

    const long nq = max_degree(n_weight), nbar_q = max_degree(nbar), ndbar_q = max_degree(ndbar);
    const long gbar_cap = ndbar_q, gdbar_cap = 2 * nq + nbar_q, fbar_cap = nbar_q + nq, fdbar_cap = gdbar_cap;
    const long ebar_cap = std::max(nbar_q + gbar_cap + fdbar_cap, ndbar_q + 2 * fbar_cap);
    const long edbar_cap = ndbar_q + gbar_cap + fdbar_cap;

    const PolyMatrix nbar_l = conv(nbar, l);
    const UniPoly& gbar = ndbar;
    const UniPoly gdbar = n_ii * ndbar - as_scalar(conv(lt, nbar_l));
    if (gdbar.is_zero())
        throw SingularityError("leading principal submatrix N_" + std::to_string(i) + " is singular", i);
    const PolyMatrix fbar = -nbar_l;
    const UniPoly& fdbar = gdbar;
    const PolyMatrix ebar = conv(gbar * fdbar, nbar) + conv(ndbar, conv(fbar, fbar.transpose()));
    const UniPoly edbar = ndbar * gbar * fdbar;

    const PolyMatrix top = hstack(conv(fdbar * gdbar, ebar), conv(edbar * gdbar, fbar));
    const PolyMatrix bottom = hstack(conv(edbar * gdbar, fbar.transpose()), PolyMatrix::scalar(edbar * fdbar * gbar));
    const UniPoly den = edbar * fdbar * gdbar;

    if (log) {
        const std::size_t gd_len =
            static_cast<std::size_t>(std::max(raw_conv(len(n_ii), len(ndbar)), raw3(len(lt), len(nbar), len(l))));
        const std::size_t f_len = static_cast<std::size_t>(raw_conv(len(nbar), len(l)));
        const std::size_t e_len = static_cast<std::size_t>(
            std::max(raw3(len(gbar), gd_len, len(nbar)), raw3(len(ndbar), f_len, f_len)));
        const std::size_t ed_len = static_cast<std::size_t>(raw3(len(ndbar), len(gbar), gd_len));
        const long num_raw = std::max({raw3(gd_len, gd_len, e_len), raw3(ed_len, gd_len, f_len),
                                       raw3(ed_len, gd_len, len(gbar))});
        log->push_back({"Gdbar", i, static_cast<long>(gd_len), gdbar_cap});
        log->push_back({"Fbar", i, static_cast<long>(f_len), fbar_cap});
        log->push_back({"Ebar", i, static_cast<long>(e_len), ebar_cap});
        log->push_back({"Edbar", i, static_cast<long>(ed_len), edbar_cap});
        log->push_back({"Nbar", i, num_raw,
                        std::max({gdbar_cap + fdbar_cap + ebar_cap, gdbar_cap + fbar_cap + edbar_cap,
                                  gbar_cap + fdbar_cap + edbar_cap})});
        log->push_back({"Ndbar", i, raw3(ed_len, gd_len, gd_len), gdbar_cap + fdbar_cap + edbar_cap});
    }
    return fraction_simplify(vstack(top, bottom), den);
}

} // namespace

MatrixPolyFraction poly_pd_inverse(const PolyMatrix& n_weight, std::vector<CapacityRecord>* capacity_log) {
    if (n_weight.rows() != n_weight.cols() || n_weight.rows() == 0)
        throw DimensionError("poly_pd_inverse: matrix must be square and nonempty");
    MatrixPolyFraction ninv = first_block_inverse(n_weight);
    for (std::size_t i = 2; i <= n_weight.rows(); ++i) ninv = next_block_inverse(ninv, n_weight, i, capacity_log);
    return ninv;
}

MatrixPolyFraction poly_wmp_inverse(const PolyProblem& problem, PolyTrace* trace) {
    const std::size_t n = problem.cols(), m = problem.rows();
    const long q = max_degree(problem.a()), m_q = max_degree(problem.m_weight()), n_q = max_degree(problem.n_weight());

    PolyPartitionState st;
    st.capacity_log = trace ? &trace->capacities : nullptr;
    st.i = 1;
    const PolyMatrix a1 = problem.a().block(0, 0, m, 1);
    ZYPair init = poly_init_ZY(a1, problem.m_weight());
    if (!a1.is_zero()) {
        log_capacity(st, "Z", raw_conv(len(a1), len(problem.m_weight())), q + m_q);
        log_capacity(st, "Y", raw3(len(a1), len(problem.m_weight()), len(a1)), 2 * q + m_q);
        if (init.y.is_zero()) throw DegenerateWeightError("a1* M a1 vanishes identically at stage 1", 1);
    }
    MatrixPolyFraction x = fraction_simplify(init.z, init.y);
    st.z = std::move(x.num);
    st.y = std::move(x.den);
    if (trace) trace->stages.push_back({st.z, st.y});
    if (n == 1) return {st.z, st.y};
    st.ninv = first_block_inverse(problem.n_weight());

    for (std::size_t i = 2; i <= n; ++i) {
        st.i = i;
        st.bounds = PolyBounds{q, m_q, n_q, max_degree(st.ninv.num), max_degree(st.ninv.den), max_degree(st.z),
                               max_degree(st.y)};
        const PolyMatrix a_i = problem.a().block(0, i - 1, m, 1);
        const PolyMatrix a_prefix = problem.a().block(0, 0, m, i - 1);
        poly_step_d(st, a_i);
        poly_step_c(st, a_i, a_prefix);
        poly_step_phi_psi(st, problem);
        poly_step_VW(st, problem);
        ZYPair next = poly_step_ZY(st);
        if (i < n) st.ninv = next_block_inverse(st.ninv, problem.n_weight(), i, st.capacity_log);
        st.z = std::move(next.z);
        st.y = std::move(next.y);
        if (trace) {
            trace->stages.push_back({st.z, st.y});
            trace->c_zero.push_back(st.c_zero);
        }
    }
    return {st.z, st.y};
}

MatrixPolyFraction poly_wmp_inverse(const PolyMatrix& a, const PolyMatrix& m_weight, const PolyMatrix& n_weight,
                                    PolyTrace* trace) {
    return poly_wmp_inverse(PolyProblem(a, m_weight, n_weight), trace);
}

} // namespace wmp
