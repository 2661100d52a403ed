#include "lindec/algebra.hpp"

#include <map>

namespace lindec {

Perm perm_identity(std::size_t deg) {
    Perm p(deg);
    for (std::size_t i = 0; i < deg; ++i) p[i] = static_cast<std::uint32_t>(i);
    return p;
}

Perm perm_compose(const Perm& a, const Perm& b) {
    if (a.size() != b.size())
        throw DimensionError("permutations of different degrees");
    Perm out(a.size());
    for (std::size_t i = 0; i < b.size(); ++i) out[i] = a[b[i]];
    return out;
}

Perm perm_inverse(const Perm& a) {
    Perm out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[a[i]] = static_cast<std::uint32_t>(i);
    return out;
}

bool is_permutation(const Perm& a) {
    std::vector<bool> seen(a.size(), false);
    for (auto x : a) {
        if (x >= a.size() || seen[x]) return false;
        seen[x] = true;
    }
    return true;
}

void Algebra::build_index() {
    index_.assign(dim_ * dim_, {});
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) {
            auto& cell = index_[i * dim_ + j];
            for (std::size_t k = 0; k < dim_; ++k) {
                std::uint64_t c = structure(i, j, k);
                if (c != 0) cell.push_back({static_cast<std::uint32_t>(k), c});
            }
        }
}

void Algebra::mul_into(const std::uint64_t* a, const std::uint64_t* b,
                       std::uint64_t* out) const {
    const std::uint64_t p = field_.modulus();
    for (std::size_t k = 0; k < dim_; ++k) out[k] = 0;
    std::uint64_t ops = 0;
    for (std::size_t i = 0; i < dim_; ++i) {
        std::uint64_t ai = a[i];
        if (ai == 0) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            std::uint64_t bj = b[j];
            if (bj == 0) continue;
            std::uint64_t ab = (ai * bj) % p;
            const auto& cell = index_[i * dim_ + j];
            for (const auto& t : cell) {
                if (t.c == 1) {
                    out[t.k] = (out[t.k] + ab) % p;
                    ops += 2;
                } else {
                    out[t.k] = (out[t.k] + ab * t.c) % p;
                    ops += 3;
                }
            }
        }
    }
    count_field_ops(ops);
}

bool Algebra::is_associative_on_basis() const {
    std::vector<std::uint64_t> ij(dim_), jk(dim_), left(dim_), right(dim_);
    std::vector<std::uint64_t> ei(dim_), ej(dim_), ek(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        std::fill(ei.begin(), ei.end(), 0);
        ei[i] = 1;
        for (std::size_t j = 0; j < dim_; ++j) {
            std::fill(ej.begin(), ej.end(), 0);
            ej[j] = 1;
            mul_into(ei.data(), ej.data(), ij.data());
            for (std::size_t k = 0; k < dim_; ++k) {
                std::fill(ek.begin(), ek.end(), 0);
                ek[k] = 1;
                mul_into(ij.data(), ek.data(), left.data());
                mul_into(ej.data(), ek.data(), jk.data());
                mul_into(ei.data(), jk.data(), right.data());
                if (left != right) return false;
            }
        }
    }
    return true;
}

bool Algebra::unit_is_identity() const {
    std::vector<std::uint64_t> ei(dim_), out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        std::fill(ei.begin(), ei.end(), 0);
        ei[i] = 1;
        mul_into(unit_.data(), ei.data(), out.data());
        if (out != ei) return false;
        mul_into(ei.data(), unit_.data(), out.data());
        if (out != ei) return false;
    }
    return true;
}

AlgebraPtr Algebra::from_table(PrimeField f, std::size_t dim,
                               std::vector<std::uint64_t> table,
                               std::vector<std::uint64_t> unit,
                               std::string label) {
    if (table.size() != dim * dim * dim)
        throw DimensionError("structure table must have dim^3 entries");
    if (unit.size() != dim)
        throw DimensionError("unit vector must have dim entries");
    for (auto& x : table) x = f.reduce(x);
    for (auto& x : unit) x = f.reduce(x);
    auto a = std::shared_ptr<Algebra>(new Algebra(f));
    a->dim_ = dim;
    a->table_ = std::move(table);
    a->unit_ = std::move(unit);
    a->label_ = std::move(label);
    a->kind_ = Kind::explicit_table;
    a->build_index();
    return a;
}

AlgebraPtr Algebra::scalars(PrimeField f) {
    return from_table(f, 1, {1}, {1}, "F_" + std::to_string(f.modulus()));
}

AlgebraPtr Algebra::group(PrimeField f, const std::vector<Perm>& gens,
                          std::size_t order_bound, std::string label) {
    if (gens.empty()) throw ConfigError("group algebra needs at least one generator");
    const std::size_t deg = gens[0].size();
    for (const auto& g : gens) {
        if (g.size() != deg)
            throw DimensionError("group generators of different degrees");
        if (!is_permutation(g))
            throw ConfigError("group generator is not a permutation");
    }

    // Breadth-first enumeration from the identity; deterministic order.
    std::vector<Perm> elements{perm_identity(deg)};
    std::map<Perm, std::size_t> index{{elements[0], 0}};
    for (std::size_t head = 0; head < elements.size(); ++head) {
        for (const auto& g : gens) {
            Perm next = perm_compose(elements[head], g);
            if (index.emplace(next, elements.size()).second) {
                elements.push_back(std::move(next));
                if (elements.size() > order_bound)
                    throw GroupTooLarge("group order exceeds the configured bound");
            }
        }
    }

    const std::size_t r = elements.size();
    std::vector<std::uint64_t> table(r * r * r, 0);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            std::size_t k = index.at(perm_compose(elements[i], elements[j]));
            table[(i * r + j) * r + k] = 1;
        }
    std::vector<std::uint64_t> unit(r, 0);
    unit[0] = 1;

    auto a = std::shared_ptr<Algebra>(new Algebra(f));
    a->dim_ = r;
    a->table_ = std::move(table);
    a->unit_ = std::move(unit);
    a->label_ = label.empty()
                    ? "F_" + std::to_string(f.modulus()) + "[G" + std::to_string(r) + "]"
                    : std::move(label);
    a->kind_ = Kind::group;
    a->group_gens_ = gens;
    a->elements_ = std::move(elements);
    a->order_bound_ = order_bound;
    a->build_index();
    return a;
}

AlgebraElement::AlgebraElement(AlgebraPtr alg, std::vector<std::uint64_t> coeffs)
    : alg_(std::move(alg)), c_(std::move(coeffs)) {
    if (c_.size() != alg_->dim())
        throw DimensionError("coefficient count != algebra dimension");
    for (auto& x : c_) x = alg_->field().reduce(x);
}

AlgebraElement AlgebraElement::zero(AlgebraPtr alg) {
    std::vector<std::uint64_t> c(alg->dim(), 0);
    return AlgebraElement(std::move(alg), std::move(c));
}

AlgebraElement AlgebraElement::one(AlgebraPtr alg) {
    auto u = alg->unit();
    return AlgebraElement(std::move(alg), std::move(u));
}

AlgebraElement AlgebraElement::basis(AlgebraPtr alg, std::size_t i) {
    if (i >= alg->dim()) throw DimensionError("basis index out of range");
    std::vector<std::uint64_t> c(alg->dim(), 0);
    c[i] = 1;
    return AlgebraElement(std::move(alg), std::move(c));
}

bool AlgebraElement::is_zero() const {
    for (auto x : c_)
        if (x != 0) return false;
    return true;
}

void AlgebraElement::check_same(const AlgebraElement& o) const {
    if (!(*alg_ == *o.alg_))
        throw IncompatibleOperands("elements of different algebras");
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
    check_same(o);
    const auto& f = alg_->field();
    std::vector<std::uint64_t> out(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] = f.add(c_[i], o.c_[i]);
    return AlgebraElement(alg_, std::move(out));
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const {
    check_same(o);
    const auto& f = alg_->field();
    std::vector<std::uint64_t> out(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] = f.sub(c_[i], o.c_[i]);
    return AlgebraElement(alg_, std::move(out));
}

AlgebraElement AlgebraElement::operator*(const AlgebraElement& o) const {
    check_same(o);
    std::vector<std::uint64_t> out(c_.size());
    alg_->mul_into(c_.data(), o.c_.data(), out.data());
    return AlgebraElement(alg_, std::move(out));
}

AlgebraElement AlgebraElement::scaled(std::uint64_t c) const {
    const auto& f = alg_->field();
    std::vector<std::uint64_t> out(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] = f.mul(c_[i], c);
    return AlgebraElement(alg_, std::move(out));
}

bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    a.check_same(b);
    return a.c_ == b.c_;
}

} // namespace lindec
