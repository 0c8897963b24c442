#include "nablakit/obstruction.hpp"

#include <random>
#include <stdexcept>

#include "nablakit/nabla.hpp"
#include "nablakit/tower.hpp"

namespace nablakit {

namespace {

void gen_mons(size_t pos, unsigned left, std::vector<unsigned>& cur,
              std::vector<std::vector<unsigned>>& out) {
    if (pos == cur.size()) {
        out.push_back(cur);
        return;
    }
    for (unsigned v = 0; v <= left; ++v) {
        cur[pos] = v;
        gen_mons(pos + 1, left - v, cur, out);
    }
    cur[pos] = 0;
}

std::vector<std::vector<unsigned>> monomials_upto(size_t n, unsigned d) {
    std::vector<std::vector<unsigned>> out;
    std::vector<unsigned> cur(n, 0);
    gen_mons(0, d, cur, out);
    return out;
}

unsigned total_degree(const std::vector<unsigned>& e) {
    unsigned t = 0;
    for (unsigned v : e) t += v;
    return t;
}

std::string mon_label(const std::vector<unsigned>& e) {
    std::string s;
    for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += "x" + std::to_string(i + 1);
        if (e[i] > 1) s += "^" + std::to_string(e[i]);
    }
    return s.empty() ? "1" : s;
}

Scalar pow_scalar(const Scalar& base, unsigned e) {
    Scalar acc = Scalar::one(base.field());
    for (unsigned k = 0; k < e; ++k) acc = acc * base;
    return acc;
}

std::vector<size_t> decode_point(size_t flat, const std::vector<size_t>& sizes) {
    std::vector<size_t> idx(sizes.size());
    for (size_t d = sizes.size(); d-- > 0;) {
        idx[d] = flat % sizes[d];
        flat /= sizes[d];
    }
    return idx;
}

void accum(std::map<size_t, Scalar>& coeffs, size_t u, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = coeffs.find(u);
    if (it == coeffs.end())
        coeffs.emplace(u, c);
    else
        it->second = it->second + c;
}

}  // namespace

RetractionProblem::RetractionProblem(std::vector<std::vector<Scalar>> sample_sets,
                                     std::vector<std::pair<Scalar, Scalar>> h_table,
                                     unsigned degree_bound)
    : sets_(std::move(sample_sets)), h_(std::move(h_table)), bound_(degree_bound) {
    if (sets_.empty()) throw std::invalid_argument("need at least one sample set");
    field_ = Field::rationals();
    for (auto& set : sets_) {
        if (set.empty()) throw std::invalid_argument("empty sample set");
        for (size_t a = 0; a < set.size(); ++a) {
            for (size_t b = a + 1; b < set.size(); ++b)
                if (set[a] == set[b]) throw std::invalid_argument("repeated sample node");
            field_ = join_fields(field_, set[a].field());
        }
    }
    for (auto& [node, value] : h_) {
        field_ = join_fields(field_, node.field());
        field_ = join_fields(field_, value.field());
    }
    for (auto& set : sets_)
        for (auto& node : set) (void)h_at(node);  // totality check
}

Scalar RetractionProblem::h_at(const Scalar& node) const {
    for (auto& [key, value] : h_)
        if (key == node) return value;
    throw std::invalid_argument("H has no value at node " + node.str());
}

size_t CompiledSystem::monomial_index(const std::vector<unsigned>& e) const {
    auto it = mon_index.find(e);
    if (it == mon_index.end()) throw std::invalid_argument("unknown monomial");
    return it->second;
}

size_t CompiledSystem::complement_index(size_t axis, size_t t_flat) const {
    auto idx = decode_point(t_flat, sizes);
    size_t flat = 0;
    for (size_t j = 0; j < sizes.size(); ++j) {
        if (j == axis) continue;
        flat = flat * sizes[j] + idx[j];
    }
    return flat;
}

size_t CompiledSystem::f_unknown(size_t axis, size_t comp_flat, size_t mon) const {
    return f_base.at(axis) + comp_flat * monomials.size() + mon;
}

size_t CompiledSystem::g_unknown(size_t axis, size_t t_flat, size_t mon) const {
    return g_base.at(axis) + t_flat * monomials.size() + mon;
}

CompiledSystem compile(const RetractionProblem& p) {
    CompiledSystem sys;
    sys.field = p.field();
    sys.n = p.axes();
    sys.degree_bound = p.degree_bound();
    sys.monomials = monomials_upto(sys.n, sys.degree_bound);
    for (size_t i = 0; i < sys.monomials.size(); ++i) sys.mon_index.emplace(sys.monomials[i], i);

    sys.grid_points = 1;
    for (size_t i = 0; i < sys.n; ++i) {
        sys.sizes.push_back(p.sample(i).size());
        sys.grid_points *= sys.sizes.back();
    }
    const size_t m = sys.monomials.size();
    size_t base = 0;
    for (size_t i = 0; i < sys.n; ++i) {
        sys.f_base.push_back(base);
        base += (sys.grid_points / sys.sizes[i]) * m;
    }
    for (size_t i = 0; i < sys.n; ++i) {
        sys.g_base.push_back(base);
        base += sys.grid_points * m;
    }
    sys.unknowns = base;

    // Labels mirror the layout, complement coordinates spelled out.
    sys.labels.assign(sys.unknowns, "");
    for (size_t i = 0; i < sys.n; ++i) {
        std::vector<size_t> comp_sizes;
        for (size_t j = 0; j < sys.n; ++j)
            if (j != i) comp_sizes.push_back(sys.sizes[j]);
        size_t comp_count = sys.grid_points / sys.sizes[i];
        for (size_t c = 0; c < comp_count; ++c) {
            auto cidx = decode_point(c, comp_sizes);
            std::string pt;
            size_t pos = 0;
            for (size_t j = 0; j < sys.n; ++j) {
                if (j == i) continue;
                if (!pt.empty()) pt += ",";
                pt += p.sample(j)[cidx[pos++]].str();
            }
            for (size_t mi = 0; mi < m; ++mi)
                sys.labels[sys.f_unknown(i, c, mi)] = "f" + std::to_string(i + 1) + "(" + pt +
                                                      ")*" + mon_label(sys.monomials[mi]);
        }
        for (size_t t = 0; t < sys.grid_points; ++t) {
            auto tidx = decode_point(t, sys.sizes);
            std::string pt;
            for (size_t j = 0; j < sys.n; ++j) {
                if (!pt.empty()) pt += ",";
                pt += p.sample(j)[tidx[j]].str();
            }
            for (size_t mi = 0; mi < m; ++mi)
                sys.labels[sys.g_unknown(i, t, mi)] = "g" + std::to_string(i + 1) + "(" + pt +
                                                      ")*" + mon_label(sys.monomials[mi]);
        }
    }

    auto mons1 = monomials_upto(sys.n, sys.degree_bound + 1);
    for (size_t t = 0; t < sys.grid_points; ++t) {
        auto tidx = decode_point(t, sys.sizes);
        std::vector<Scalar> coords;
        Scalar rhs = Scalar::one(sys.field);
        std::string pt;
        for (size_t j = 0; j < sys.n; ++j) {
            coords.push_back(p.sample(j)[tidx[j]].embedded(sys.field));
            rhs = rhs * p.h_at(p.sample(j)[tidx[j]]);
            if (!pt.empty()) pt += ",";
            pt += coords.back().str();
        }
        for (auto& nu : mons1) {
            LinEq eq{{}, total_degree(nu) == 0 ? rhs : Scalar::zero(sys.field)};
            if (total_degree(nu) <= sys.degree_bound) {
                size_t mi = sys.monomial_index(nu);
                for (size_t i = 0; i < sys.n; ++i)
                    accum(eq.coeffs, sys.f_unknown(i, sys.complement_index(i, t), mi),
                          Scalar::one(sys.field));
                for (size_t i = 0; i < sys.n; ++i)
                    accum(eq.coeffs, sys.g_unknown(i, t, mi), coords[i].neg());
            }
            for (size_t i = 0; i < sys.n; ++i) {
                if (nu[i] == 0) continue;
                auto mu = nu;
                --mu[i];
                accum(eq.coeffs, sys.g_unknown(i, t, sys.monomial_index(mu)),
                      Scalar::one(sys.field));
            }
            sys.provenance.push_back("t=(" + pt + "); monomial=" + mon_label(nu));
            sys.equations.push_back(std::move(eq));
        }
    }
    return sys;
}

LinearSolution solve_compiled(const CompiledSystem& sys) {
    auto sol = solve_sparse(sys.unknowns, sys.equations, sys.field);
    if (sol.feasible && !verify_assignment(sys.equations, sol.assignment))
        throw std::logic_error("assignment failed substitution check");
    if (!sol.feasible && !verify_null_combination(sys.equations, sol.combination))
        throw std::logic_error("refutation failed substitution check");
    return sol;
}

TabulatedFunction evaluation_identity(const RetractionProblem& p, const CompiledSystem& sys,
                                      const std::vector<Scalar>& assignment) {
    if (assignment.size() != sys.unknowns)
        throw std::invalid_argument("assignment length mismatch");
    if (sys.n != p.axes()) throw std::invalid_argument("system does not match problem");
    std::vector<Axis> axes;
    for (size_t i = 0; i < p.axes(); ++i)
        axes.push_back(Axis{"x" + std::to_string(i + 1), p.sample(i)});
    Grid grid(axes);

    std::vector<Scalar> values;
    for (size_t t = 0; t < sys.grid_points; ++t) {
        auto tidx = decode_point(t, sys.sizes);
        std::vector<Scalar> coords;
        for (size_t j = 0; j < sys.n; ++j)
            coords.push_back(p.sample(j)[tidx[j]].embedded(sys.field));
        Scalar acc = Scalar::zero(sys.field);
        for (size_t i = 0; i < sys.n; ++i) {
            size_t comp = sys.complement_index(i, t);
            for (size_t mi = 0; mi < sys.monomials.size(); ++mi) {
                Scalar c = assignment[sys.f_unknown(i, comp, mi)];
                if (c.is_zero()) continue;
                Scalar term = c;
                for (size_t j = 0; j < sys.n; ++j)
                    term = term * pow_scalar(coords[j], sys.monomials[mi][j]);
                acc = acc + term;
            }
        }
        Scalar h = Scalar::one(sys.field);
        for (size_t j = 0; j < sys.n; ++j) h = h * p.h_at(p.sample(j)[tidx[j]]);
        values.push_back(acc - h);
    }
    return TabulatedFunction(grid, values);
}

Scalar nabla_witness(const RetractionProblem& p,
                     const std::vector<std::vector<Scalar>>& nodes) {
    if (nodes.size() != p.axes())
        throw std::invalid_argument("need one node list per sample set");
    size_t want = p.degree_bound() + 2;
    Scalar acc = Scalar::one(p.field());
    for (size_t i = 0; i < p.axes(); ++i) {
        if (nodes[i].size() != want)
            throw std::invalid_argument("insufficient nodes: need degree bound + 2 per axis");
        Grid g({Axis{"s", p.sample(i)}});
        std::vector<Scalar> values;
        for (auto& node : p.sample(i)) values.push_back(p.h_at(node));
        TabulatedFunction table(g, values);
        acc = acc * nabla_apply(table, "s", nodes[i]).scalar_value();
    }
    return acc;
}

SweepReport sweep(size_t axes_max, size_t size_max, unsigned d_max, HSource source,
                  std::uint64_t seed) {
    if (axes_max < 1 || axes_max > 3 || size_max < 2 || size_max > 6 || d_max > 4)
        throw std::invalid_argument("instance beyond configured size limits");
    std::mt19937_64 rng(seed);
    auto q = Field::rationals();
    Tower tower;

    SweepReport report;
    for (size_t n = 1; n <= axes_max; ++n)
        for (size_t size = 2; size <= size_max; ++size)
            for (unsigned d = 0; d <= d_max; ++d) {
                std::vector<Scalar> nodes;
                for (size_t v = 0; v < size; ++v)
                    nodes.push_back(Scalar::from_int(q, static_cast<long long>(v)));
                std::vector<std::pair<Scalar, Scalar>> h;
                for (auto& node : nodes) {
                    if (source == HSource::RandomRational)
                        h.emplace_back(node, Scalar::from_int(
                                                 q, static_cast<long long>(rng() % 19) - 9));
                    else
                        h.emplace_back(node, tower.apply(node));
                }
                RetractionProblem prob(std::vector<std::vector<Scalar>>(n, nodes), h, d);
                auto sys = compile(prob);
                auto sol = solve_compiled(sys);

                SweepRow row;
                row.axes = n;
                row.size = size;
                row.degree_bound = d;
                row.feasible = sol.feasible;
                if (size >= d + 2) {
                    row.witness_available = true;
                    std::vector<Scalar> z(nodes.begin(), nodes.begin() + d + 2);
                    Scalar w = nabla_witness(prob, std::vector<std::vector<Scalar>>(n, z));
                    row.witness_nonzero = !w.is_zero();
                    row.witness = w.str();
                    if (row.witness_nonzero && row.feasible)
                        report.witness_contract_holds = false;
                }
                if (sol.feasible) {
                    // Color each grid point by the largest total degree among
                    // its f polynomials and hunt a side-2 monochromatic box.
                    std::vector<std::string> labels;
                    for (auto& node : nodes) labels.push_back(node.str());
                    auto color_fn = [&](const std::vector<size_t>& tuple) {
                        size_t flat = 0;
                        for (size_t j = 0; j < tuple.size(); ++j)
                            flat = flat * size + tuple[j];
                        long deg = -1;
                        for (size_t i = 0; i < n; ++i) {
                            size_t comp = sys.complement_index(i, flat);
                            for (size_t mi = 0; mi < sys.monomials.size(); ++mi)
                                if (!sol.assignment[sys.f_unknown(i, comp, mi)].is_zero())
                                    deg = std::max(
                                        deg,
                                        static_cast<long>(total_degree(sys.monomials[mi])));
                        }
                        return static_cast<int>(deg + 1);
                    };
                    auto coloring = Coloring::box_symmetrized(labels, n, color_fn);
                    auto box = find_mono_box(coloring, std::vector<size_t>(n, 2));
                    if (box) {
                        row.degree_box = box;
                        row.degree_box_verified = verify_mono_box(coloring, *box);
                    }
                }
                report.rows.push_back(std::move(row));
            }
    return report;
}

}  // namespace nablakit
