#include "nablakit/grid.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

#include "nablakit/poly_text.hpp"

namespace nablakit {

Grid::Grid(std::vector<Axis> axes) : axes_(std::move(axes)) {
    std::set<std::string> labels;
    for (auto& ax : axes_) {
        if (!labels.insert(ax.label).second)
            throw std::invalid_argument("duplicate axis label: " + ax.label);
        for (size_t i = 0; i < ax.nodes.size(); ++i)
            for (size_t j = i + 1; j < ax.nodes.size(); ++j)
                if (ax.nodes[i] == ax.nodes[j])
                    throw std::invalid_argument("repeated node " + ax.nodes[i].str() +
                                                " on axis " + ax.label);
    }
}

size_t Grid::axis_index(const std::string& label) const {
    for (size_t i = 0; i < axes_.size(); ++i)
        if (axes_[i].label == label) return i;
    throw std::invalid_argument("unknown axis: " + label);
}

size_t Grid::node_index(size_t axis, const Scalar& s) const {
    const auto& nodes = axes_.at(axis).nodes;
    for (size_t i = 0; i < nodes.size(); ++i)
        if (nodes[i] == s) return i;
    throw std::invalid_argument("scalar " + s.str() + " is not a node of axis " +
                                axes_[axis].label);
}

size_t Grid::npoints() const {
    size_t n = 1;
    for (auto& ax : axes_) n *= ax.nodes.size();
    return n;
}

Grid Grid::without_axis(const std::string& label) const {
    size_t k = axis_index(label);
    std::vector<Axis> rest;
    for (size_t i = 0; i < axes_.size(); ++i)
        if (i != k) rest.push_back(axes_[i]);
    return Grid(std::move(rest));
}

size_t Grid::flatten(const std::vector<size_t>& idx) const {
    if (idx.size() != axes_.size()) throw std::invalid_argument("point arity mismatch");
    size_t flat = 0;
    for (size_t i = 0; i < idx.size(); ++i) {
        if (idx[i] >= axes_[i].nodes.size()) throw std::out_of_range("node index out of range");
        flat = flat * axes_[i].nodes.size() + idx[i];
    }
    return flat;
}

std::vector<size_t> Grid::unflatten(size_t flat) const {
    std::vector<size_t> idx(axes_.size());
    for (size_t i = axes_.size(); i-- > 0;) {
        size_t w = axes_[i].nodes.size();
        idx[i] = flat % w;
        flat /= w;
    }
    return idx;
}

std::vector<Scalar> Grid::coords(const std::vector<size_t>& idx) const {
    std::vector<Scalar> out;
    out.reserve(idx.size());
    for (size_t i = 0; i < idx.size(); ++i) out.push_back(axes_[i].nodes[idx[i]]);
    return out;
}

TabulatedFunction::TabulatedFunction(Grid grid, std::vector<Scalar> values)
    : grid_(std::move(grid)), values_(std::move(values)) {
    if (values_.size() != grid_.npoints())
        throw std::invalid_argument("value count does not match grid size");
    if (values_.empty()) throw std::logic_error("grid with zero points");
    field_ = values_.front().field();
    for (auto& v : values_) field_ = join_fields(field_, v.field());
    for (auto& ax : grid_.axes())
        for (auto& s : ax.nodes) field_ = join_fields(field_, s.field());
    for (auto& v : values_) v = v.embedded(field_);
}

TabulatedFunction TabulatedFunction::tabulate(
    const Grid& grid, const std::function<Scalar(const std::vector<Scalar>&)>& fn) {
    std::vector<Scalar> vals;
    vals.reserve(grid.npoints());
    for (size_t flat = 0; flat < grid.npoints(); ++flat)
        vals.push_back(fn(grid.coords(grid.unflatten(flat))));
    return TabulatedFunction(grid, std::move(vals));
}

TabulatedFunction TabulatedFunction::constant(const Grid& grid, const Scalar& c) {
    return TabulatedFunction(grid, std::vector<Scalar>(grid.npoints(), c));
}

const Scalar& TabulatedFunction::scalar_value() const {
    if (grid_.dim() != 0) throw std::logic_error("table is not 0-dimensional");
    return values_.front();
}

bool TabulatedFunction::is_zero() const {
    for (auto& v : values_)
        if (!v.is_zero()) return false;
    return true;
}

TabulatedFunction TabulatedFunction::scaled(const Scalar& c) const {
    std::vector<Scalar> vals;
    vals.reserve(values_.size());
    for (auto& v : values_) vals.push_back(v * c);
    return TabulatedFunction(grid_, std::move(vals));
}

namespace {
void require_same_grid(const TabulatedFunction& a, const TabulatedFunction& b) {
    const auto& ga = a.grid().axes();
    const auto& gb = b.grid().axes();
    if (ga.size() != gb.size()) throw std::invalid_argument("grid mismatch");
    for (size_t i = 0; i < ga.size(); ++i) {
        if (ga[i].label != gb[i].label || ga[i].nodes.size() != gb[i].nodes.size())
            throw std::invalid_argument("grid mismatch");
        for (size_t j = 0; j < ga[i].nodes.size(); ++j)
            if (!(ga[i].nodes[j] == gb[i].nodes[j])) throw std::invalid_argument("grid mismatch");
    }
}
}  // namespace

TabulatedFunction operator+(const TabulatedFunction& a, const TabulatedFunction& b) {
    require_same_grid(a, b);
    std::vector<Scalar> vals;
    vals.reserve(a.values_.size());
    for (size_t i = 0; i < a.values_.size(); ++i) vals.push_back(a.values_[i] + b.values_[i]);
    return TabulatedFunction(a.grid_, std::move(vals));
}

TabulatedFunction operator-(const TabulatedFunction& a, const TabulatedFunction& b) {
    require_same_grid(a, b);
    std::vector<Scalar> vals;
    vals.reserve(a.values_.size());
    for (size_t i = 0; i < a.values_.size(); ++i) vals.push_back(a.values_[i] - b.values_[i]);
    return TabulatedFunction(a.grid_, std::move(vals));
}

TabulatedFunction operator*(const TabulatedFunction& a, const TabulatedFunction& b) {
    require_same_grid(a, b);
    std::vector<Scalar> vals;
    vals.reserve(a.values_.size());
    for (size_t i = 0; i < a.values_.size(); ++i) vals.push_back(a.values_[i] * b.values_[i]);
    return TabulatedFunction(a.grid_, std::move(vals));
}

bool operator==(const TabulatedFunction& a, const TabulatedFunction& b) {
    try {
        require_same_grid(a, b);
    } catch (const std::invalid_argument&) {
        return false;
    }
    for (size_t i = 0; i < a.values_.size(); ++i)
        if (!(a.values_[i] == b.values_[i])) return false;
    return true;
}

std::string table_to_csv(const TabulatedFunction& f) {
    std::ostringstream out;
    const Grid& g = f.grid();
    for (auto& ax : g.axes()) out << ax.label << ",";
    out << "value\n";
    for (size_t flat = 0; flat < g.npoints(); ++flat) {
        auto coords = g.coords(g.unflatten(flat));
        for (auto& c : coords) out << c.str() << ",";
        out << f.values()[flat].str() << "\n";
    }
    return out.str();
}

namespace {
std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            cells.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    cells.push_back(cur);
    for (auto& c : cells) {
        size_t b = c.find_first_not_of(" \t\r");
        size_t e = c.find_last_not_of(" \t\r");
        c = (b == std::string::npos) ? "" : c.substr(b, e - b + 1);
    }
    return cells;
}
}  // namespace

TabulatedFunction table_from_csv(const std::string& text, const FieldPtr& field) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("empty CSV");
    auto header = split_csv_line(line);
    if (header.empty() || header.back() != "value")
        throw std::invalid_argument("CSV header must end with a `value` column");
    size_t naxes = header.size() - 1;

    std::vector<Axis> axes(naxes);
    for (size_t i = 0; i < naxes; ++i) {
        if (header[i].empty()) throw std::invalid_argument("empty axis label in CSV header");
        axes[i].label = header[i];
    }

    std::vector<std::pair<std::vector<Scalar>, Scalar>> rows;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        auto cells = split_csv_line(line);
        if (cells.size() != naxes + 1)
            throw std::invalid_argument("CSV row has wrong number of columns: " + line);
        std::vector<Scalar> coords;
        for (size_t i = 0; i < naxes; ++i) {
            Scalar s = parse_scalar(cells[i], field);
            coords.push_back(s);
            bool known = false;
            for (auto& n : axes[i].nodes)
                if (n == s) known = true;
            if (!known) axes[i].nodes.push_back(s);
        }
        rows.emplace_back(std::move(coords), parse_scalar(cells.back(), field));
    }
    Grid grid(axes);
    if (rows.size() != grid.npoints())
        throw std::invalid_argument("CSV does not cover the grid exactly once");

    std::vector<Scalar> values(grid.npoints(), Scalar::zero(field));
    std::vector<bool> seen(grid.npoints(), false);
    for (auto& [coords, val] : rows) {
        std::vector<size_t> idx;
        for (size_t i = 0; i < naxes; ++i) idx.push_back(grid.node_index(i, coords[i]));
        size_t flat = grid.flatten(idx);
        if (seen[flat]) throw std::invalid_argument("duplicate CSV row for one grid point");
        seen[flat] = true;
        values[flat] = val;
    }
    return TabulatedFunction(grid, std::move(values));
}

}  // namespace nablakit
