#include "lindec/linalg.hpp"

#include <algorithm>

namespace lindec {

FVector::FVector(PrimeField f, std::vector<std::uint64_t> vals)
    : field_(f), v_(std::move(vals)) {
    for (auto& x : v_) x = field_.reduce(x);
}

void FVector::check_compatible(const FVector& o) const {
    if (field_ != o.field_)
        throw IncompatibleOperands("vectors over different fields");
    if (v_.size() != o.v_.size())
        throw DimensionError("vector length mismatch");
}

bool FVector::is_zero() const {
    return std::all_of(v_.begin(), v_.end(),
                       [](std::uint64_t x) { return x == 0; });
}

void FVector::axpy(std::uint64_t c, const FVector& w) {
    check_compatible(w);
    c = field_.reduce(c);
    if (c == 0) return;
    const std::uint64_t p = field_.modulus();
    for (std::size_t i = 0; i < v_.size(); ++i)
        v_[i] = (v_[i] + c * w.v_[i]) % p;
    count_field_ops(2 * v_.size());
}

void FVector::scale(std::uint64_t c) {
    c = field_.reduce(c);
    if (c == 1) return;
    const std::uint64_t p = field_.modulus();
    for (auto& x : v_) x = (x * c) % p;
    count_field_ops(v_.size());
}

FVector FVector::operator+(const FVector& o) const {
    check_compatible(o);
    FVector out(field_, v_.size());
    const std::uint64_t p = field_.modulus();
    for (std::size_t i = 0; i < v_.size(); ++i) {
        std::uint64_t s = v_[i] + o.v_[i];
        out.v_[i] = s >= p ? s - p : s;
    }
    count_field_ops(v_.size());
    return out;
}

FVector FVector::operator-(const FVector& o) const {
    check_compatible(o);
    FVector out(field_, v_.size());
    const std::uint64_t p = field_.modulus();
    for (std::size_t i = 0; i < v_.size(); ++i)
        out.v_[i] = v_[i] >= o.v_[i] ? v_[i] - o.v_[i] : v_[i] + p - o.v_[i];
    count_field_ops(v_.size());
    return out;
}

FVector FVector::operator-() const {
    FVector out(field_, v_.size());
    const std::uint64_t p = field_.modulus();
    for (std::size_t i = 0; i < v_.size(); ++i)
        out.v_[i] = v_[i] == 0 ? 0 : p - v_[i];
    count_field_ops(v_.size());
    return out;
}

bool operator==(const FVector& a, const FVector& b) {
    a.check_compatible(b);
    return a.v_ == b.v_;
}

FMatrix FMatrix::identity(PrimeField f, std::size_t n) {
    FMatrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1 % f.modulus());
    return m;
}

FVector FMatrix::row(std::size_t i) const {
    FVector r(field_, cols_);
    for (std::size_t j = 0; j < cols_; ++j) r.data()[j] = at(i, j);
    return r;
}

FMatrix FMatrix::operator*(const FMatrix& o) const {
    if (field_ != o.field_)
        throw IncompatibleOperands("matrices over different fields");
    if (cols_ != o.rows_) throw DimensionError("matrix product shape mismatch");
    FMatrix out(field_, rows_, o.cols_);
    const std::uint64_t p = field_.modulus();
    std::uint64_t ops = 0;
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            std::uint64_t aik = a_[i * cols_ + k];
            if (aik == 0) continue;
            const std::uint64_t* brow = &o.a_[k * o.cols_];
            std::uint64_t* orow = &out.a_[i * o.cols_];
            for (std::size_t j = 0; j < o.cols_; ++j)
                orow[j] = (orow[j] + aik * brow[j]) % p;
            ops += 2 * o.cols_;
        }
    }
    count_field_ops(ops);
    return out;
}

FMatrix FMatrix::operator+(const FMatrix& o) const {
    if (field_ != o.field_)
        throw IncompatibleOperands("matrices over different fields");
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw DimensionError("matrix sum shape mismatch");
    FMatrix out(field_, rows_, cols_);
    const std::uint64_t p = field_.modulus();
    for (std::size_t i = 0; i < a_.size(); ++i) {
        std::uint64_t s = a_[i] + o.a_[i];
        out.a_[i] = s >= p ? s - p : s;
    }
    count_field_ops(a_.size());
    return out;
}

FMatrix FMatrix::operator-(const FMatrix& o) const {
    if (field_ != o.field_)
        throw IncompatibleOperands("matrices over different fields");
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw DimensionError("matrix difference shape mismatch");
    FMatrix out(field_, rows_, cols_);
    const std::uint64_t p = field_.modulus();
    for (std::size_t i = 0; i < a_.size(); ++i)
        out.a_[i] = a_[i] >= o.a_[i] ? a_[i] - o.a_[i] : a_[i] + p - o.a_[i];
    count_field_ops(a_.size());
    return out;
}

FVector FMatrix::mul_vec(const FVector& v) const {
    if (field_ != v.field())
        throw IncompatibleOperands("matrix and vector over different fields");
    if (cols_ != v.size()) throw DimensionError("matrix-vector shape mismatch");
    FVector out(field_, rows_);
    const std::uint64_t p = field_.modulus();
    for (std::size_t i = 0; i < rows_; ++i) {
        std::uint64_t acc = 0;
        const std::uint64_t* arow = &a_[i * cols_];
        for (std::size_t j = 0; j < cols_; ++j)
            acc = (acc + arow[j] * v[j]) % p;
        out.data()[i] = acc;
    }
    count_field_ops(2 * rows_ * cols_);
    return out;
}

FVector FMatrix::vec_mul(const FVector& v) const {
    if (field_ != v.field())
        throw IncompatibleOperands("matrix and vector over different fields");
    if (rows_ != v.size()) throw DimensionError("vector-matrix shape mismatch");
    FVector out(field_, cols_);
    const std::uint64_t p = field_.modulus();
    for (std::size_t i = 0; i < rows_; ++i) {
        std::uint64_t vi = v[i];
        if (vi == 0) continue;
        const std::uint64_t* arow = &a_[i * cols_];
        for (std::size_t j = 0; j < cols_; ++j)
            out.data()[j] = (out.data()[j] + vi * arow[j]) % p;
    }
    count_field_ops(2 * rows_ * cols_);
    return out;
}

FMatrix FMatrix::transpose() const {
    FMatrix out(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            out.a_[j * rows_ + i] = a_[i * cols_ + j];
    return out;
}

FMatrix FMatrix::pow(std::uint64_t e) const {
    if (rows_ != cols_) throw DimensionError("power of a non-square matrix");
    FMatrix acc = identity(field_, rows_);
    FMatrix base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        if (e >>= 1) base = base * base;
    }
    return acc;
}

bool operator==(const FMatrix& a, const FMatrix& b) {
    if (a.field_ != b.field_)
        throw IncompatibleOperands("matrices over different fields");
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

std::optional<FMatrix> try_inverse(const FMatrix& m) {
    if (m.rows() != m.cols()) throw DimensionError("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    const PrimeField f = m.field();
    const std::uint64_t p = f.modulus();
    // Augmented [M | I], Gauss-Jordan.
    std::vector<std::vector<std::uint64_t>> a(n, std::vector<std::uint64_t>(2 * n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m.at(i, j);
        a[i][n + i] = 1 % p;
    }
    std::uint64_t ops = 0;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t sel = col;
        while (sel < n && a[sel][col] == 0) ++sel;
        if (sel == n) return std::nullopt;
        std::swap(a[sel], a[col]);
        std::uint64_t ip = f.inv(a[col][col]);
        if (ip != 1) {
            for (std::size_t j = col; j < 2 * n; ++j) a[col][j] = (a[col][j] * ip) % p;
            ops += 2 * n - col;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col) continue;
            std::uint64_t c = a[r][col];
            if (c == 0) continue;
            for (std::size_t j = col; j < 2 * n; ++j)
                a[r][j] = (a[r][j] + (p - (c * a[col][j]) % p)) % p;
            ops += 2 * (2 * n - col);
        }
    }
    count_field_ops(ops);
    FMatrix out(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out.set(i, j, a[i][n + j]);
    return out;
}

FMatrix inverse(const FMatrix& m) {
    auto r = try_inverse(m);
    if (!r) throw NotInvertible("matrix has no inverse");
    return *r;
}

void EchelonBasis::reduce(FVector& r, std::vector<std::uint64_t>* acc) const {
    const std::uint64_t p = field_.modulus();
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        std::uint64_t c = r[pivots_[i]];
        if (c == 0) continue;
        r.axpy(field_.neg(c), rows_[i]);
        if (acc) {
            const auto& t = transform_[i];
            for (std::size_t j = 0; j < t.size(); ++j)
                (*acc)[j] = ((*acc)[j] + c * t[j]) % p;
            count_field_ops(2 * t.size());
        }
    }
}

EchelonBasis::ExtendResult EchelonBasis::extend(const FVector& v) {
    if (v.field() != field_)
        throw IncompatibleOperands("vector over a different field");
    if (v.size() != dim_) throw DimensionError("vector length != basis dimension");

    FVector r = v;
    std::vector<std::uint64_t> acc(originals_.size(), 0);
    reduce(r, &acc);
    if (r.is_zero()) return {false, std::move(acc)};

    std::size_t piv = 0;
    while (r[piv] == 0) ++piv;
    std::uint64_t ip = field_.inv(r[piv]);
    r.scale(ip);

    // r == ip·(v - sum acc[j]·originals[j]); record that expression.
    std::vector<std::uint64_t> tr(originals_.size() + 1, 0);
    for (std::size_t j = 0; j < acc.size(); ++j)
        tr[j] = field_.neg(field_.mul(ip, acc[j]));
    tr.back() = ip;

    for (auto& t : transform_) t.push_back(0);
    const std::uint64_t p = field_.modulus();
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        std::uint64_t c = rows_[i][piv];
        if (c == 0) continue;
        rows_[i].axpy(field_.neg(c), r);
        auto& t = transform_[i];
        for (std::size_t j = 0; j < tr.size(); ++j)
            t[j] = (t[j] + (p - (c * tr[j]) % p)) % p;
        count_field_ops(2 * tr.size());
    }

    originals_.push_back(v);
    rows_.push_back(std::move(r));
    pivots_.push_back(piv);
    transform_.push_back(std::move(tr));
    return {true, {}};
}

std::optional<std::vector<std::uint64_t>> EchelonBasis::try_decompose(
    const FVector& v) const {
    if (v.field() != field_)
        throw IncompatibleOperands("vector over a different field");
    if (v.size() != dim_) throw DimensionError("vector length != basis dimension");
    FVector r = v;
    std::vector<std::uint64_t> acc(originals_.size(), 0);
    reduce(r, &acc);
    if (!r.is_zero()) return std::nullopt;
    // Re-substitute as a self-check on the bookkeeping.
    FVector s(field_, dim_);
    for (std::size_t j = 0; j < acc.size(); ++j) s.axpy(acc[j], originals_[j]);
    if (s != v)
        throw Error("internal: decomposition failed re-substitution");
    return acc;
}

std::vector<std::uint64_t> EchelonBasis::decompose(const FVector& v) const {
    auto r = try_decompose(v);
    if (!r) throw NotInSpan("vector is outside the spanned subspace");
    return *r;
}

bool EchelonBasis::contains(const FVector& v) const {
    if (v.field() != field_)
        throw IncompatibleOperands("vector over a different field");
    if (v.size() != dim_) throw DimensionError("vector length != basis dimension");
    FVector r = v;
    reduce(r, nullptr);
    return r.is_zero();
}

std::optional<LinearSolution> try_solve_linear(const FMatrix& a, const FVector& b) {
    if (a.field() != b.field())
        throw IncompatibleOperands("system over different fields");
    if (a.rows() != b.size()) throw DimensionError("rhs length != row count");
    const PrimeField f = a.field();
    const std::uint64_t p = f.modulus();
    const std::size_t R = a.rows(), C = a.cols();

    std::vector<std::vector<std::uint64_t>> m(R, std::vector<std::uint64_t>(C + 1));
    for (std::size_t i = 0; i < R; ++i) {
        for (std::size_t j = 0; j < C; ++j) m[i][j] = a.at(i, j);
        m[i][C] = b[i];
    }

    std::vector<std::size_t> pivot_cols;
    std::size_t row = 0;
    std::uint64_t ops = 0;
    for (std::size_t col = 0; col < C && row < R; ++col) {
        std::size_t sel = row;
        while (sel < R && m[sel][col] == 0) ++sel;
        if (sel == R) continue;
        std::swap(m[sel], m[row]);
        std::uint64_t ip = f.inv(m[row][col]);
        if (ip != 1) {
            for (std::size_t j = col; j <= C; ++j) m[row][j] = (m[row][j] * ip) % p;
            ops += C + 1 - col;
        }
        for (std::size_t r = 0; r < R; ++r) {
            if (r == row) continue;
            std::uint64_t c = m[r][col];
            if (c == 0) continue;
            for (std::size_t j = col; j <= C; ++j)
                m[r][j] = (m[r][j] + (p - (c * m[row][j]) % p)) % p;
            ops += 2 * (C + 1 - col);
        }
        pivot_cols.push_back(col);
        ++row;
    }
    count_field_ops(ops);

    for (std::size_t r = row; r < R; ++r)
        if (m[r][C] != 0) return std::nullopt;

    LinearSolution sol{FVector(f, C), {}};
    for (std::size_t i = 0; i < pivot_cols.size(); ++i)
        sol.particular.data()[pivot_cols[i]] = m[i][C];

    std::vector<bool> is_pivot(C, false);
    for (auto pc : pivot_cols) is_pivot[pc] = true;
    for (std::size_t fc = 0; fc < C; ++fc) {
        if (is_pivot[fc]) continue;
        FVector k(f, C);
        k.data()[fc] = 1 % p;
        for (std::size_t i = 0; i < pivot_cols.size(); ++i)
            k.data()[pivot_cols[i]] = f.neg(m[i][fc]);
        sol.kernel.push_back(std::move(k));
    }
    return sol;
}

LinearSolution solve_linear(const FMatrix& a, const FVector& b) {
    auto r = try_solve_linear(a, b);
    if (!r) throw NoSolution("inconsistent linear system");
    return *r;
}

} // namespace lindec
