#include "lindec/algmatrix.hpp"

#include <map>

namespace lindec {

AlgMatrix::AlgMatrix(AlgebraPtr alg, std::size_t n)
    : alg_(std::move(alg)), n_(n), data_(n * n * alg_->dim(), 0) {}

AlgMatrix AlgMatrix::identity(AlgebraPtr alg, std::size_t n) {
    AlgMatrix m(std::move(alg), n);
    const auto& unit = m.alg_->unit();
    for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t* e = m.entry(i, i);
        for (std::size_t k = 0; k < unit.size(); ++k) e[k] = unit[k];
    }
    return m;
}

AlgebraElement AlgMatrix::at(std::size_t i, std::size_t j) const {
    const std::uint64_t* e = entry(i, j);
    return AlgebraElement(alg_, std::vector<std::uint64_t>(e, e + alg_->dim()));
}

void AlgMatrix::set(std::size_t i, std::size_t j, const AlgebraElement& e) {
    if (!(*e.algebra() == *alg_))
        throw IncompatibleOperands("entry from a different algebra");
    std::uint64_t* dst = entry(i, j);
    for (std::size_t k = 0; k < alg_->dim(); ++k) dst[k] = e.coeffs()[k];
}

void AlgMatrix::check_same(const AlgMatrix& o) const {
    if (!(*alg_ == *o.alg_))
        throw IncompatibleOperands("matrices over different algebras");
    if (n_ != o.n_) throw DimensionError("matrix size mismatch");
}

AlgMatrix AlgMatrix::operator+(const AlgMatrix& o) const {
    check_same(o);
    AlgMatrix out(alg_, n_);
    const std::uint64_t p = alg_->field().modulus();
    for (std::size_t i = 0; i < data_.size(); ++i) {
        std::uint64_t s = data_[i] + o.data_[i];
        out.data_[i] = s >= p ? s - p : s;
    }
    count_field_ops(data_.size());
    return out;
}

AlgMatrix AlgMatrix::operator-(const AlgMatrix& o) const {
    check_same(o);
    AlgMatrix out(alg_, n_);
    const std::uint64_t p = alg_->field().modulus();
    for (std::size_t i = 0; i < data_.size(); ++i)
        out.data_[i] = data_[i] >= o.data_[i] ? data_[i] - o.data_[i]
                                              : data_[i] + p - o.data_[i];
    count_field_ops(data_.size());
    return out;
}

AlgMatrix AlgMatrix::operator*(const AlgMatrix& o) const {
    check_same(o);
    const std::size_t r = alg_->dim();
    AlgMatrix out(alg_, n_);
    std::vector<std::uint64_t> tmp(r);
    const std::uint64_t p = alg_->field().modulus();
    std::uint64_t ops = 0;
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) {
            std::uint64_t* acc = out.entry(i, j);
            for (std::size_t k = 0; k < n_; ++k) {
                alg_->mul_into(entry(i, k), o.entry(k, j), tmp.data());
                for (std::size_t t = 0; t < r; ++t) {
                    std::uint64_t s = acc[t] + tmp[t];
                    acc[t] = s >= p ? s - p : s;
                }
                ops += r;
            }
        }
    count_field_ops(ops);
    return out;
}

AlgMatrix AlgMatrix::scaled(std::uint64_t c) const {
    AlgMatrix out(alg_, n_);
    const std::uint64_t p = alg_->field().modulus();
    c %= p;
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = (data_[i] * c) % p;
    count_field_ops(data_.size());
    return out;
}

AlgMatrix AlgMatrix::pow_naive(std::uint64_t e) const {
    if (n_ == 0) return *this;
    AlgMatrix acc = identity(alg_, n_);
    for (std::uint64_t i = 0; i < e; ++i) acc = acc * *this;
    return acc;
}

AlgMatrix AlgMatrix::pow(std::uint64_t e) const {
    AlgMatrix acc = identity(alg_, n_);
    AlgMatrix base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        if (e >>= 1) base = base * base;
    }
    return acc;
}

bool operator==(const AlgMatrix& a, const AlgMatrix& b) {
    a.check_same(b);
    return a.data_ == b.data_;
}

FMatrix regular_representation(const AlgMatrix& m) {
    const auto& alg = *m.algebra();
    const std::size_t n = m.n(), r = alg.dim();
    const std::uint64_t p = alg.field().modulus();
    FMatrix theta(alg.field(), n * r, n * r);
    std::uint64_t ops = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const std::uint64_t* a = m.entry(i, k);
            // lambda(a): e_v -> a·e_v expanded through the structure table.
            for (std::size_t s = 0; s < r; ++s) {
                std::uint64_t as = a[s];
                if (as == 0) continue;
                for (std::size_t v = 0; v < r; ++v)
                    for (std::size_t u = 0; u < r; ++u) {
                        std::uint64_t c = alg.structure(s, v, u);
                        if (c == 0) continue;
                        std::size_t row = i * r + u, col = k * r + v;
                        std::uint64_t cur = theta.at(row, col);
                        theta.set(row, col, (cur + as * c) % p);
                        ops += 2;
                    }
            }
        }
    count_field_ops(ops);
    return theta;
}

std::optional<AlgMatrix> try_inverse(const AlgMatrix& m) {
    const auto& alg = m.algebra();
    const std::size_t n = m.n(), r = alg->dim();
    FMatrix theta = regular_representation(m);
    auto theta_inv = try_inverse(theta);
    if (!theta_inv) return std::nullopt;

    AlgMatrix out(alg, n);
    const auto& unit = alg->unit();
    for (std::size_t j = 0; j < n; ++j) {
        FVector rhs(alg->field(), n * r);
        for (std::size_t t = 0; t < r; ++t) rhs.data()[j * r + t] = unit[t];
        FVector col = theta_inv->mul_vec(rhs);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t t = 0; t < r; ++t)
                out.entry(i, j)[t] = col[i * r + t];
    }

    AlgMatrix id = AlgMatrix::identity(alg, n);
    if (!(m * out == id) || !(out * m == id)) return std::nullopt;
    return out;
}

AlgMatrix inverse(const AlgMatrix& m) {
    auto r = try_inverse(m);
    if (!r) throw NotInvertible("matrix over the algebra has no inverse");
    return *r;
}

FMatrix scalar_matrix(const AlgMatrix& m) {
    if (m.algebra()->dim() != 1)
        throw IncompatibleOperands("expected a matrix over the scalar algebra");
    FMatrix out(m.field(), m.n(), m.n());
    for (std::size_t i = 0; i < m.n(); ++i)
        for (std::size_t j = 0; j < m.n(); ++j) out.set(i, j, m.entry(i, j)[0]);
    return out;
}

AlgMatrix from_scalar_matrix(AlgebraPtr alg, const FMatrix& m) {
    if (alg->dim() != 1)
        throw IncompatibleOperands("expected the scalar algebra");
    if (m.rows() != m.cols()) throw DimensionError("expected a square matrix");
    AlgMatrix out(std::move(alg), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out.entry(i, j)[0] = m.at(i, j);
    return out;
}

namespace {

std::map<std::uint64_t, std::uint64_t> factor_u64(std::uint64_t n,
                                                  std::map<std::uint64_t, std::uint64_t> acc = {}) {
    for (std::uint64_t d = 2; d * d <= n; ++d)
        while (n % d == 0) {
            ++acc[d];
            n /= d;
        }
    if (n > 1) ++acc[n];
    return acc;
}

} // namespace

std::uint64_t matrix_order(const AlgMatrix& m) {
    if (m.algebra()->dim() != 1)
        throw IncompatibleOperands("order computation expects the scalar algebra");
    const std::size_t n = m.n();
    const std::uint64_t p = m.field().modulus();

    // |GL_n(F_p)| = prod_{k<n} (p^n - p^k), factored term by term: each term is
    // p^k·(p^{n-k} - 1) with a small second factor at desk scale.
    unsigned __int128 group_order = 1;
    std::map<std::uint64_t, std::uint64_t> factors;
    std::uint64_t pn = 1;
    for (std::size_t i = 0; i < n; ++i) {
        unsigned __int128 next = (unsigned __int128)pn * p;
        if (next > (std::uint64_t{1} << 62)) throw GroupTooLarge("matrix group too large for order computation");
        pn = static_cast<std::uint64_t>(next);
    }
    for (std::size_t k = 0; k < n; ++k) {
        std::uint64_t pk = 1;
        for (std::size_t i = 0; i < k; ++i) pk *= p;
        std::uint64_t term = pn - pk;
        group_order *= term;
        if (group_order > ((unsigned __int128)1 << 62))
            throw GroupTooLarge("matrix group too large for order computation");
        factors[p] += k;
        factors = factor_u64(term / pk, std::move(factors));
    }

    if (!try_inverse(m)) throw NotInvertible("order of a singular matrix");

    std::uint64_t t = static_cast<std::uint64_t>(group_order);
    AlgMatrix id = AlgMatrix::identity(m.algebra(), n);
    for (const auto& [q, mult] : factors) {
        for (std::uint64_t i = 0; i < mult; ++i) {
            if (t % q != 0) break;
            std::uint64_t cand = t / q;
            if (m.pow(cand) == id)
                t = cand;
            else
                break;
        }
    }
    return t;
}

FVector random_fvector(const PrimeField& f, std::size_t n, Rng& rng) {
    FVector v(f, n);
    for (auto& x : v.data()) x = rng.below(f.modulus());
    return v;
}

AlgMatrix random_alg_matrix(const AlgebraPtr& alg, std::size_t n, Rng& rng) {
    AlgMatrix m(alg, n);
    const std::uint64_t p = alg->field().modulus();
    for (auto& x : m.data()) x = rng.below(p);
    return m;
}

AlgMatrix random_invertible(const AlgebraPtr& alg, std::size_t n, Rng& rng,
                            std::size_t max_tries) {
    for (std::size_t t = 0; t < max_tries; ++t) {
        AlgMatrix m = random_alg_matrix(alg, n, rng);
        if (try_inverse(m)) return m;
    }
    throw SamplerFailure("could not sample an invertible matrix");
}

} // namespace lindec
