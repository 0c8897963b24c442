// Labeled finite grids and exact function tables over them.
//
// Axes are addressed by label, never by position, so removing an axis leaves
// the remaining labels stable.  A grid point is a vector of node indices
// aligned with the axis order; tables store one Scalar per point in row-major
// order (last axis fastest).
#ifndef NABLAKIT_GRID_HPP
#define NABLAKIT_GRID_HPP

#include <functional>
#include <string>
#include <vector>

#include "nablakit/scalar.hpp"

namespace nablakit {

struct Axis {
    std::string label;
    std::vector<Scalar> nodes;  // pairwise distinct
};

class Grid {
public:
    Grid() = default;
    explicit Grid(std::vector<Axis> axes);  // validates distinctness + label uniqueness

    const std::vector<Axis>& axes() const { return axes_; }
    size_t dim() const { return axes_.size(); }
    // Index of the axis with this label; throws std::invalid_argument if absent.
    size_t axis_index(const std::string& label) const;
    const Axis& axis(const std::string& label) const { return axes_[axis_index(label)]; }

    // Index of a node on an axis; throws if the scalar is not a node there.
    size_t node_index(size_t axis, const Scalar& s) const;

    // Total number of points; the empty grid has exactly one (the empty tuple).
    size_t npoints() const;

    Grid without_axis(const std::string& label) const;

    // Mixed-radix conversions between flat offsets and per-axis node indices.
    size_t flatten(const std::vector<size_t>& idx) const;
    std::vector<size_t> unflatten(size_t flat) const;

    // The scalar coordinates of a point given by node indices.
    std::vector<Scalar> coords(const std::vector<size_t>& idx) const;

private:
    std::vector<Axis> axes_;
};

class TabulatedFunction {
public:
    // values in row-major point order; all embedded into one common field.
    TabulatedFunction(Grid grid, std::vector<Scalar> values);

    static TabulatedFunction tabulate(
        const Grid& grid, const std::function<Scalar(const std::vector<Scalar>&)>& fn);
    static TabulatedFunction constant(const Grid& grid, const Scalar& c);

    const Grid& grid() const { return grid_; }
    const FieldPtr& field() const { return field_; }
    const std::vector<Scalar>& values() const { return values_; }

    const Scalar& at(const std::vector<size_t>& idx) const { return values_[grid_.flatten(idx)]; }
    // The single value of a 0-dimensional table.
    const Scalar& scalar_value() const;

    bool is_zero() const;
    TabulatedFunction scaled(const Scalar& c) const;
    friend TabulatedFunction operator+(const TabulatedFunction& a, const TabulatedFunction& b);
    friend TabulatedFunction operator-(const TabulatedFunction& a, const TabulatedFunction& b);
    // Pointwise product; grids must coincide.
    friend TabulatedFunction operator*(const TabulatedFunction& a, const TabulatedFunction& b);
    friend bool operator==(const TabulatedFunction& a, const TabulatedFunction& b);
    friend bool operator!=(const TabulatedFunction& a, const TabulatedFunction& b) {
        return !(a == b);
    }

private:
    Grid grid_;
    FieldPtr field_;
    std::vector<Scalar> values_;
};

// CSV with one node column per axis plus a trailing `value` column; scalars in
// the project-wide text grammar.  Import reconstructs axis node order from
// first appearance and requires every grid point exactly once.
std::string table_to_csv(const TabulatedFunction& f);
TabulatedFunction table_from_csv(const std::string& text, const FieldPtr& field);

}  // namespace nablakit

#endif
