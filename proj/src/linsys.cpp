#include "nablakit/linsys.hpp"

#include <stdexcept>
#include <utility>

namespace nablakit {

namespace {

// acc[k] -= v, erasing exact zeros so sparsity tests stay meaningful.
void sub_into(std::map<size_t, Scalar>& acc, size_t k, const Scalar& v) {
    auto it = acc.find(k);
    if (it == acc.end()) {
        if (!v.is_zero()) acc.emplace(k, v.neg());
        return;
    }
    it->second = it->second - v;
    if (it->second.is_zero()) acc.erase(it);
}

struct WorkRow {
    std::map<size_t, Scalar> c;
    Scalar b;
    std::map<size_t, Scalar> combo;  // expression in terms of input rows
};

}  // namespace

LinearSolution solve_sparse(size_t unknowns, const std::vector<LinEq>& eqs,
                            const FieldPtr& ground) {
    FieldPtr f = ground;
    for (const auto& eq : eqs) {
        for (const auto& [j, v] : eq.coeffs) f = join_fields(f, v.field());
        f = join_fields(f, eq.rhs.field());
    }

    std::vector<std::pair<size_t, WorkRow>> elim;  // (pivot column, row)
    for (size_t ri = 0; ri < eqs.size(); ++ri) {
        WorkRow w{{}, eqs[ri].rhs, {{ri, Scalar::one(f)}}};
        for (const auto& [j, v] : eqs[ri].coeffs) {
            if (j >= unknowns) throw std::invalid_argument("unknown index out of range");
            if (!v.is_zero()) w.c.emplace(j, v);
        }
        for (const auto& [pc, er] : elim) {
            auto it = w.c.find(pc);
            if (it == w.c.end()) continue;
            Scalar factor = it->second;
            w.c.erase(it);
            for (const auto& [j, v] : er.c)
                if (j != pc) sub_into(w.c, j, factor * v);
            w.b = w.b - factor * er.b;
            for (const auto& [k, v] : er.combo) sub_into(w.combo, k, factor * v);
        }
        if (w.c.empty()) {
            if (w.b.is_zero()) continue;  // redundant equation
            LinearSolution out;
            out.feasible = false;
            out.combination = std::move(w.combo);
            return out;
        }
        auto pick = w.c.begin();
        for (auto it = std::next(w.c.begin()); it != w.c.end(); ++it)
            if (it->second.complexity() < pick->second.complexity()) pick = it;
        size_t pc = pick->first;
        Scalar inv = pick->second.inv();
        w.c.erase(pick);
        for (auto& [j, v] : w.c) v = v * inv;
        w.b = w.b * inv;
        for (auto& [k, v] : w.combo) v = v * inv;
        elim.emplace_back(pc, std::move(w));
    }

    LinearSolution out;
    out.feasible = true;
    out.assignment.assign(unknowns, Scalar::zero(f));
    // Reverse order: a row may mention pivots of rows eliminated after it,
    // never before it.
    for (auto it = elim.rbegin(); it != elim.rend(); ++it) {
        Scalar val = it->second.b;
        for (const auto& [j, v] : it->second.c) val = val - v * out.assignment[j];
        out.assignment[it->first] = val;
    }
    return out;
}

bool verify_assignment(const std::vector<LinEq>& eqs, const std::vector<Scalar>& assignment) {
    for (const auto& eq : eqs) {
        Scalar acc = eq.rhs.neg();
        for (const auto& [j, v] : eq.coeffs) {
            if (j >= assignment.size()) return false;
            acc = acc + v * assignment[j];
        }
        if (!acc.is_zero()) return false;
    }
    return true;
}

bool verify_null_combination(const std::vector<LinEq>& eqs,
                             const std::map<size_t, Scalar>& combination) {
    if (combination.empty()) return false;
    std::map<size_t, Scalar> cols;
    bool have_rhs = false;
    Scalar rhs_acc;
    for (const auto& [ri, lambda] : combination) {
        if (ri >= eqs.size()) return false;
        for (const auto& [j, v] : eqs[ri].coeffs) {
            auto it = cols.find(j);
            if (it == cols.end())
                cols.emplace(j, lambda * v);
            else
                it->second = it->second + lambda * v;
        }
        Scalar t = lambda * eqs[ri].rhs;
        rhs_acc = have_rhs ? rhs_acc + t : t;
        have_rhs = true;
    }
    for (const auto& [j, v] : cols)
        if (!v.is_zero()) return false;
    return !rhs_acc.is_zero();
}

}  // namespace nablakit
