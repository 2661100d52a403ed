#include "lindec/actions.hpp"

namespace lindec {

FVector flatten(const AlgMatrix& m) {
    return FVector(m.field(), m.data());
}

AlgMatrix unflatten(const FlatSpace& space, const FVector& v) {
    if (v.size() != space.dim())
        throw DimensionError("flat vector length != space dimension");
    if (v.field() != space.field())
        throw IncompatibleOperands("vector over a different field");
    AlgMatrix m(space.alg, space.n);
    m.data() = v.data();
    return m;
}

Action Action::left_mul(AlgMatrix m) {
    auto p = std::make_shared<Payload>();
    p->kind = Kind::left_mul;
    p->dim = m.flat_dim();
    p->mats.push_back(std::move(m));
    return Action(std::move(p));
}

Action Action::right_mul(AlgMatrix m) {
    auto p = std::make_shared<Payload>();
    p->kind = Kind::right_mul;
    p->dim = m.flat_dim();
    p->mats.push_back(std::move(m));
    return Action(std::move(p));
}

Action Action::sandwich(AlgMatrix g, AlgMatrix h) {
    if (!(*g.algebra() == *h.algebra()) || g.n() != h.n())
        throw IncompatibleOperands("sandwich factors over different spaces");
    auto p = std::make_shared<Payload>();
    p->kind = Kind::sandwich;
    p->dim = g.flat_dim();
    p->mats.push_back(std::move(g));
    p->mats.push_back(std::move(h));
    return Action(std::move(p));
}

Action Action::conjugation(AlgMatrix g) {
    AlgMatrix g_inv = inverse(g);
    auto p = std::make_shared<Payload>();
    p->kind = Kind::conjugation;
    p->dim = g.flat_dim();
    p->mats.push_back(std::move(g));
    p->mats.push_back(std::move(g_inv));
    return Action(std::move(p));
}

Action Action::explicit_linear(FMatrix l) {
    if (l.rows() != l.cols())
        throw DimensionError("explicit action matrix must be square");
    auto p = std::make_shared<Payload>();
    p->kind = Kind::explicit_linear;
    p->dim = l.rows();
    p->lin = std::move(l);
    return Action(std::move(p));
}

Action Action::compose(std::vector<Action> parts) {
    if (parts.empty()) throw DimensionError("composite of zero actions");
    for (const auto& a : parts)
        if (a.dim() != parts.front().dim())
            throw DimensionError("composite parts act on different dimensions");
    auto p = std::make_shared<Payload>();
    p->kind = Kind::compose;
    p->dim = parts.front().dim();
    p->sub = std::move(parts);
    return Action(std::move(p));
}

PrimeField Action::field() const {
    switch (payload_->kind) {
        case Kind::explicit_linear:
            return payload_->lin->field();
        case Kind::compose:
            return payload_->sub.front().field();
        default:
            return payload_->mats[0].field();
    }
}

FVector Action::apply(const FVector& v) const {
    if (v.size() != dim()) throw DimensionError("vector length != action dimension");
    switch (payload_->kind) {
        case Kind::left_mul: {
            const AlgMatrix& m = payload_->mats[0];
            FlatSpace sp{m.algebra(), m.n()};
            return flatten(m * unflatten(sp, v));
        }
        case Kind::right_mul: {
            const AlgMatrix& m = payload_->mats[0];
            FlatSpace sp{m.algebra(), m.n()};
            return flatten(unflatten(sp, v) * m);
        }
        case Kind::sandwich:
        case Kind::conjugation: {
            const AlgMatrix& g = payload_->mats[0];
            const AlgMatrix& h = payload_->mats[1];
            FlatSpace sp{g.algebra(), g.n()};
            return flatten(g * unflatten(sp, v) * h);
        }
        case Kind::explicit_linear:
            return payload_->lin->mul_vec(v);
        case Kind::compose: {
            FVector cur = v;
            for (auto it = payload_->sub.rbegin(); it != payload_->sub.rend(); ++it)
                cur = it->apply(cur);
            return cur;
        }
    }
    throw Error("internal: unknown action kind");
}

FMatrix Action::materialize() const {
    const std::size_t d = dim();
    const PrimeField f = field();
    FMatrix out(f, d, d);
    FVector e(f, d);
    for (std::size_t j = 0; j < d; ++j) {
        e.data().assign(d, 0);
        e.data()[j] = 1;
        FVector col = apply(e);
        for (std::size_t i = 0; i < d; ++i) out.set(i, j, col[i]);
    }
    return out;
}

const AlgMatrix& Action::matrix() const {
    if (payload_->mats.empty())
        throw Error("action kind carries no algebra matrix");
    return payload_->mats[0];
}

const AlgMatrix& Action::second_matrix() const {
    if (payload_->mats.size() < 2)
        throw Error("action kind carries no second matrix");
    return payload_->mats[1];
}

const FMatrix& Action::linear_matrix() const {
    if (!payload_->lin) throw Error("action kind carries no explicit matrix");
    return *payload_->lin;
}

const std::vector<Action>& Action::parts() const {
    if (payload_->kind != Kind::compose)
        throw Error("action is not a composite");
    return payload_->sub;
}

bool commute_check(const std::vector<Action>& u_actions,
                   const std::vector<Action>& w_actions, std::size_t trials,
                   Rng& rng) {
    if (u_actions.empty() || w_actions.empty()) return true;
    const std::size_t d = u_actions.front().dim();
    PrimeField f = u_actions.front().field();
    for (const auto& u : u_actions)
        for (const auto& w : w_actions)
            for (std::size_t t = 0; t < trials; ++t) {
                FVector v = random_fvector(f, d, rng);
                if (u.apply(w.apply(v)) != w.apply(u.apply(v))) return false;
            }
    return true;
}

AlgMatrix embed_row(const AlgebraPtr& scalar_alg, const FVector& row) {
    if (scalar_alg->dim() != 1)
        throw IncompatibleOperands("row embedding expects the scalar algebra");
    AlgMatrix m(scalar_alg, row.size());
    for (std::size_t j = 0; j < row.size(); ++j) m.entry(0, j)[0] = row[j];
    return m;
}

FVector extract_row(const AlgMatrix& m) {
    if (m.algebra()->dim() != 1)
        throw IncompatibleOperands("row extraction expects the scalar algebra");
    FVector out(m.field(), m.n());
    for (std::size_t j = 0; j < m.n(); ++j) out.data()[j] = m.entry(0, j)[0];
    return out;
}

} // namespace lindec
