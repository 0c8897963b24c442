// Finite monochromatic-structure search: subsets in colorings of r-element
// sets, and boxes in symmetric colorings of tuples.
//
// Searches are complete backtracking in a fixed canonical order (colors
// ascending, members lexicographic), so an empty result is a
// proof-by-exhaustion for the instance and outputs are deterministic.
// Verifiers re-color from scratch and share no state with the searchers.
#ifndef NABLAKIT_RAMSEY_HPP
#define NABLAKIT_RAMSEY_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace nablakit {

class Coloring {
public:
    enum class Mode { Subsets, Box };

    // Total coloring of the arity-element subsets of the ground set, read
    // from a callback on sorted index vectors and materialized.
    static Coloring subsets(std::vector<std::string> ground, size_t arity,
                            const std::function<int(const std::vector<size_t>&)>& fn);
    // Total coloring of arity-tuples (repeats allowed); fn must already be
    // symmetric, which construction validates over all tuples.
    static Coloring box(std::vector<std::string> ground, size_t arity,
                        const std::function<int(const std::vector<size_t>&)>& fn);
    // Box coloring from an arbitrary fn, symmetrized by taking the maximum
    // over each permutation orbit.
    static Coloring box_symmetrized(std::vector<std::string> ground, size_t arity,
                                    const std::function<int(const std::vector<size_t>&)>& fn);

    // {"schema":1,"mode":"subsets"|"box","ground":[...],"arity":k,
    //  "colors":[{"on":[labels...],"color":c},...]}; must be total.
    static Coloring from_json(const std::string& text);
    std::string to_json() const;

    Mode mode() const { return mode_; }
    size_t arity() const { return arity_; }
    const std::vector<std::string>& ground() const { return ground_; }
    size_t ground_size() const { return ground_.size(); }
    const std::vector<int>& palette() const { return palette_; }  // sorted distinct colors

    // Color of a sorted arity-subset (Subsets mode) or any tuple (Box mode).
    int color_of(const std::vector<size_t>& members) const;

private:
    Coloring() = default;
    void finalize();  // builds palette

    Mode mode_ = Mode::Subsets;
    size_t arity_ = 0;
    std::vector<std::string> ground_;
    // Key: sorted members (Subsets) or sorted-with-repeats tuple (Box).
    std::map<std::vector<size_t>, int> map_;
    std::vector<int> palette_;
};

// Named example colorings: "pentagon" (5-cycle pair coloring, arity 2),
// "parity" (box-mode pair coloring by index parity, ground size n),
// "constant" (all-one-color subset coloring, arity 2, ground size n).
Coloring builtin_coloring(const std::string& name, size_t n);

struct MonoSubset {
    std::vector<size_t> members;  // sorted indices into ground()
    int color;
};

struct MonoBox {
    std::vector<std::vector<size_t>> sides;  // arity() sorted index lists
    int color;
};

// Size-q subset whose arity-subsets are all one color, or nullopt when the
// complete search exhausts.  Requires arity <= q <= ground size.
std::optional<MonoSubset> find_mono_subset(const Coloring& c, size_t q);

// Sides of the given sizes whose full product is one color; sides may
// overlap unless disjoint is set.  Box mode only.
std::optional<MonoBox> find_mono_box(const Coloring& c, const std::vector<size_t>& sizes,
                                     bool disjoint = false);

// Independent certificate checks: re-enumerate every subset/tuple.
bool verify_mono_subset(const Coloring& c, const MonoSubset& found);
bool verify_mono_box(const Coloring& c, const MonoBox& found, bool disjoint = false);

}  // namespace nablakit

#endif
