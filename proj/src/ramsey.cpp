#include "nablakit/ramsey.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"

namespace nablakit {

namespace {

// Sorted k-combinations of {0..n-1} in lexicographic order; stop when fn
// returns true (found).
bool for_each_combination(size_t n, size_t k,
                          const std::function<bool(const std::vector<size_t>&)>& fn) {
    std::vector<size_t> c(k);
    for (size_t i = 0; i < k; ++i) c[i] = i;
    if (k > n) return false;
    for (;;) {
        if (fn(c)) return true;
        // next combination
        size_t i = k;
        while (i-- > 0) {
            if (c[i] + (k - i) < n) {
                ++c[i];
                for (size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
                break;
            }
            if (i == 0) return false;
        }
        if (k == 0) return false;
    }
}

// All length-k tuples over {0..n-1} (n^k of them).
void for_each_tuple(size_t n, size_t k, const std::function<void(const std::vector<size_t>&)>& fn) {
    std::vector<size_t> t(k, 0);
    for (;;) {
        fn(t);
        size_t i = k;
        while (i-- > 0) {
            if (++t[i] < n) break;
            t[i] = 0;
            if (i == 0) return;
        }
        if (k == 0) return;
    }
}

std::vector<size_t> sorted_copy(const std::vector<size_t>& v) {
    std::vector<size_t> s = v;
    std::sort(s.begin(), s.end());
    return s;
}

void require_distinct_labels(const std::vector<std::string>& ground) {
    for (size_t i = 0; i < ground.size(); ++i)
        for (size_t j = i + 1; j < ground.size(); ++j)
            if (ground[i] == ground[j])
                throw std::invalid_argument("duplicate ground label: " + ground[i]);
}

}  // namespace

void Coloring::finalize() {
    palette_.clear();
    for (auto& [k, c] : map_) {
        (void)k;
        if (!std::binary_search(palette_.begin(), palette_.end(), c)) {
            palette_.push_back(c);
            std::sort(palette_.begin(), palette_.end());
        }
    }
}

Coloring Coloring::subsets(std::vector<std::string> ground, size_t arity,
                           const std::function<int(const std::vector<size_t>&)>& fn) {
    if (arity == 0 || arity > ground.size())
        throw std::invalid_argument("subset arity out of range");
    require_distinct_labels(ground);
    Coloring c;
    c.mode_ = Mode::Subsets;
    c.arity_ = arity;
    c.ground_ = std::move(ground);
    for_each_combination(c.ground_.size(), arity, [&](const std::vector<size_t>& s) {
        c.map_.emplace(s, fn(s));
        return false;
    });
    c.finalize();
    return c;
}

Coloring Coloring::box(std::vector<std::string> ground, size_t arity,
                       const std::function<int(const std::vector<size_t>&)>& fn) {
    if (arity == 0) throw std::invalid_argument("box arity must be positive");
    require_distinct_labels(ground);
    Coloring c;
    c.mode_ = Mode::Box;
    c.arity_ = arity;
    c.ground_ = std::move(ground);
    for_each_tuple(c.ground_.size(), arity, [&](const std::vector<size_t>& t) {
        auto key = sorted_copy(t);
        int color = fn(t);
        auto [it, inserted] = c.map_.emplace(key, color);
        if (!inserted && it->second != color)
            throw std::invalid_argument("box coloring is not symmetric");
    });
    c.finalize();
    return c;
}

Coloring Coloring::box_symmetrized(std::vector<std::string> ground, size_t arity,
                                   const std::function<int(const std::vector<size_t>&)>& fn) {
    if (arity == 0) throw std::invalid_argument("box arity must be positive");
    require_distinct_labels(ground);
    Coloring c;
    c.mode_ = Mode::Box;
    c.arity_ = arity;
    c.ground_ = std::move(ground);
    for_each_tuple(c.ground_.size(), arity, [&](const std::vector<size_t>& t) {
        auto key = sorted_copy(t);
        int color = fn(t);
        auto [it, inserted] = c.map_.emplace(key, color);
        if (!inserted) it->second = std::max(it->second, color);
    });
    c.finalize();
    return c;
}

int Coloring::color_of(const std::vector<size_t>& members) const {
    if (members.size() != arity_) throw std::invalid_argument("arity mismatch");
    std::vector<size_t> key = sorted_copy(members);
    if (mode_ == Mode::Subsets)
        for (size_t i = 1; i < key.size(); ++i)
            if (key[i] == key[i - 1]) throw std::invalid_argument("repeated subset member");
    auto it = map_.find(key);
    if (it == map_.end()) throw std::invalid_argument("tuple outside the colored domain");
    return it->second;
}

Coloring Coloring::from_json(const std::string& text) {
    nlohmann::json doc = nlohmann::json::parse(text);
    if (doc.value("schema", 0) != 1) throw std::invalid_argument("unsupported coloring schema");
    std::string mode = doc.at("mode").get<std::string>();
    std::vector<std::string> ground = doc.at("ground").get<std::vector<std::string>>();
    size_t arity = doc.at("arity").get<size_t>();
    std::map<std::vector<std::string>, int> given;
    for (auto& e : doc.at("colors")) {
        auto on = e.at("on").get<std::vector<std::string>>();
        std::sort(on.begin(), on.end());
        if (!given.emplace(on, e.at("color").get<int>()).second)
            throw std::invalid_argument("duplicate coloring entry");
    }
    auto lookup = [&](const std::vector<size_t>& idx) {
        std::vector<std::string> labels;
        for (size_t i : idx) labels.push_back(ground.at(i));
        std::sort(labels.begin(), labels.end());
        auto it = given.find(labels);
        if (it == given.end()) {
            std::string joined;
            for (auto& l : labels) joined += (joined.empty() ? "" : ",") + l;
            throw std::invalid_argument("coloring not total: missing {" + joined + "}");
        }
        return it->second;
    };
    // lookup reads `ground`; hand the constructor its own copy.
    std::vector<std::string> ground_copy = ground;
    if (mode == "subsets") return subsets(std::move(ground_copy), arity, lookup);
    if (mode == "box") return box(std::move(ground_copy), arity, lookup);
    throw std::invalid_argument("mode must be subsets or box");
}

std::string Coloring::to_json() const {
    nlohmann::json colors = nlohmann::json::array();
    for (auto& [key, color] : map_) {
        nlohmann::json on = nlohmann::json::array();
        for (size_t i : key) on.push_back(ground_[i]);
        colors.push_back({{"on", on}, {"color", color}});
    }
    nlohmann::json out{{"schema", 1},
                       {"mode", mode_ == Mode::Subsets ? "subsets" : "box"},
                       {"ground", ground_},
                       {"arity", arity_},
                       {"colors", colors}};
    return out.dump(2);
}

Coloring builtin_coloring(const std::string& name, size_t n) {
    if (name == "pentagon") {
        std::vector<std::string> ground = {"v0", "v1", "v2", "v3", "v4"};
        return Coloring::subsets(std::move(ground), 2, [](const std::vector<size_t>& s) {
            size_t d = (s[1] - s[0]) % 5;
            return (d == 1 || d == 4) ? 1 : 0;
        });
    }
    if (name == "parity") {
        if (n < 2) throw std::invalid_argument("parity coloring needs n >= 2");
        std::vector<std::string> ground;
        for (size_t i = 0; i < n; ++i) ground.push_back("s" + std::to_string(i));
        return Coloring::box(std::move(ground), 2, [](const std::vector<size_t>& t) {
            return (t[0] % 2 == t[1] % 2) ? 1 : 0;
        });
    }
    if (name == "constant") {
        if (n < 2) throw std::invalid_argument("constant coloring needs n >= 2");
        std::vector<std::string> ground;
        for (size_t i = 0; i < n; ++i) ground.push_back("s" + std::to_string(i));
        return Coloring::subsets(std::move(ground), 2,
                                 [](const std::vector<size_t>&) { return 0; });
    }
    throw std::invalid_argument("unknown builtin coloring: " + name);
}

std::optional<MonoSubset> find_mono_subset(const Coloring& c, size_t q) {
    if (c.mode() != Coloring::Mode::Subsets)
        throw std::invalid_argument("subset search needs a subset-mode coloring");
    if (q < c.arity()) throw std::invalid_argument("target size below arity");
    if (q > c.ground_size()) throw std::invalid_argument("target size exceeds ground set");

    size_t n = c.ground_size();
    for (int color : c.palette()) {
        std::vector<size_t> chosen;
        // Complete depth-first extension in lexicographic member order.
        std::function<bool(size_t)> extend = [&](size_t start) {
            if (chosen.size() == q) return true;
            for (size_t v = start; v < n; ++v) {
                bool ok = true;
                if (chosen.size() + 1 >= c.arity()) {
                    for_each_combination(chosen.size(), c.arity() - 1,
                                         [&](const std::vector<size_t>& pick) {
                                             std::vector<size_t> sub;
                                             for (size_t p : pick) sub.push_back(chosen[p]);
                                             sub.push_back(v);
                                             if (c.color_of(sub) != color) ok = false;
                                             return !ok;
                                         });
                }
                if (!ok) continue;
                chosen.push_back(v);
                if (extend(v + 1)) return true;
                chosen.pop_back();
            }
            return false;
        };
        if (extend(0)) return MonoSubset{chosen, color};
    }
    return std::nullopt;
}

namespace {
bool box_all_one_color(const Coloring& c, const std::vector<std::vector<size_t>>& sides,
                       int color) {
    std::vector<size_t> pick(sides.size(), 0);
    for (;;) {
        std::vector<size_t> tuple;
        for (size_t i = 0; i < sides.size(); ++i) tuple.push_back(sides[i][pick[i]]);
        if (c.color_of(tuple) != color) return false;
        size_t i = sides.size();
        while (i-- > 0) {
            if (++pick[i] < sides[i].size()) break;
            pick[i] = 0;
            if (i == 0) return true;
        }
    }
}
}  // namespace

std::optional<MonoBox> find_mono_box(const Coloring& c, const std::vector<size_t>& sizes,
                                     bool disjoint) {
    if (c.mode() != Coloring::Mode::Box)
        throw std::invalid_argument("box search needs a box-mode coloring");
    if (sizes.size() != c.arity()) throw std::invalid_argument("one size per tuple position");
    size_t total = 0;
    for (size_t s : sizes) {
        if (s == 0) throw std::invalid_argument("box sides must be nonempty");
        total += s;
    }
    if (disjoint && total > c.ground_size()) return std::nullopt;

    size_t n = c.ground_size();
    for (int color : c.palette()) {
        std::vector<std::vector<size_t>> sides;
        std::vector<bool> used(n, false);
        std::function<bool(size_t)> pick_side = [&](size_t axis) {
            if (axis == sizes.size()) return box_all_one_color(c, sides, color);
            return for_each_combination(n, sizes[axis], [&](const std::vector<size_t>& comb) {
                if (disjoint)
                    for (size_t v : comb)
                        if (used[v]) return false;
                sides.push_back(comb);
                if (disjoint)
                    for (size_t v : comb) used[v] = true;
                bool found = pick_side(axis + 1);
                if (!found) {
                    sides.pop_back();
                    if (disjoint)
                        for (size_t v : comb) used[v] = false;
                }
                return found;
            });
        };
        if (pick_side(0)) return MonoBox{sides, color};
    }
    return std::nullopt;
}

bool verify_mono_subset(const Coloring& c, const MonoSubset& found) {
    if (c.mode() != Coloring::Mode::Subsets) return false;
    if (found.members.size() < c.arity()) return false;
    for (size_t m : found.members)
        if (m >= c.ground_size()) return false;
    for (size_t i = 1; i < found.members.size(); ++i)
        if (found.members[i] <= found.members[i - 1]) return false;
    bool all = true;
    for_each_combination(found.members.size(), c.arity(), [&](const std::vector<size_t>& pick) {
        std::vector<size_t> sub;
        for (size_t p : pick) sub.push_back(found.members[p]);
        if (c.color_of(sub) != found.color) all = false;
        return !all;
    });
    return all;
}

bool verify_mono_box(const Coloring& c, const MonoBox& found, bool disjoint) {
    if (c.mode() != Coloring::Mode::Box) return false;
    if (found.sides.size() != c.arity()) return false;
    std::vector<bool> used(c.ground_size(), false);
    for (auto& side : found.sides) {
        if (side.empty()) return false;
        for (size_t v : side) {
            if (v >= c.ground_size()) return false;
            if (disjoint) {
                if (used[v]) return false;
                used[v] = true;
            }
        }
    }
    return box_all_one_color(c, found.sides, found.color);
}

}  // namespace nablakit
