#include "nablakit/tower.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"
#include "nablakit/multipoly.hpp"
#include "nablakit/nabla.hpp"
#include "nablakit/poly_text.hpp"

namespace nablakit {

Scalar demote_constants(const Scalar& s) {
    if (s.field()->kind() != Field::Kind::Function) return s;
    const RatFunc& r = s.fn();
    if (!r.num.is_zero() && !r.num.is_constant()) return s;
    if (!r.den.is_constant()) return s;
    if (r.num.is_zero()) return demote_constants(Scalar::zero(s.field()->base()));
    return demote_constants(r.num.constant_value() / r.den.constant_value());
}

Scalar substitute_symbols(const Scalar& s, const std::map<std::string, Scalar>& bindings) {
    if (s.field()->kind() != Field::Kind::Function) return s;
    const RatFunc& r = s.fn();
    std::map<std::string, Scalar> relevant;
    for (auto& v : r.num.vars())
        if (auto it = bindings.find(v); it != bindings.end()) relevant.emplace(*it);
    for (auto& v : r.den.vars())
        if (auto it = bindings.find(v); it != bindings.end()) relevant.emplace(*it);
    if (relevant.empty()) return s;
    MultiPoly num = r.num.substitute(relevant);
    MultiPoly den = r.den.substitute(relevant);
    if (den.is_zero()) throw std::domain_error("substitution sends denominator to zero");
    return make_ratfunc(num, den);
}

Tower::Tower(FieldPtr ground) : ground_(std::move(ground)) {
    stages_.push_back(ground_);
}

long Tower::stage_of(const Scalar& s) const {
    Scalar t = demote_constants(s);
    FieldPtr f = t.field();
    long n = 0;
    while (!f->equals(*ground_)) {
        if (f->kind() != Field::Kind::Function)
            throw std::invalid_argument("scalar " + s.str() + " lies outside the tower over " +
                                        ground_->name());
        f = f->base();
        ++n;
    }
    return n;
}

FieldPtr Tower::stage_field(size_t n) {
    while (stages_.size() <= n) stages_.push_back(Field::function(stages_.back()));
    return stages_[n];
}

Scalar Tower::apply(const Scalar& s) {
    Scalar rep = demote_constants(s);
    long n = stage_of(rep);
    std::string key = rep.str();
    auto it = registry_.find({n, key});
    if (it != registry_.end()) return entries_[it->second].image;
    std::string symbol = "X[" + key + "]";
    Scalar image = make_ratfunc(MultiPoly::variable(stage_field(static_cast<size_t>(n)), symbol));
    registry_.emplace(std::make_pair(n, key), entries_.size());
    entries_.push_back(Entry{n, rep, symbol, image});
    return image;
}

bool Tower::is_registered(const Scalar& s) const {
    Scalar rep = demote_constants(s);
    return registry_.count({stage_of(rep), rep.str()}) > 0;
}

TabulatedFunction Tower::generic_table(const std::vector<Scalar>& sample,
                                       const std::string& axis) {
    std::vector<Scalar> values;
    values.reserve(sample.size());
    for (auto& s : sample) values.push_back(apply(s));
    Grid g({Axis{axis, sample}});
    return TabulatedFunction(std::move(g), std::move(values));
}

TowerWitness Tower::nonpoly_certificate(const std::vector<Scalar>& sample, long d) {
    if (d < 0) throw std::invalid_argument("degree bound must be >= 0");
    if (static_cast<long>(sample.size()) < d + 2)
        throw std::invalid_argument("need at least d+2 sample values");
    long n = stage_of(sample.front());
    for (auto& s : sample)
        if (stage_of(s) != n)
            throw std::invalid_argument("sample values must share one stage");
    std::vector<Scalar> nodes(sample.begin(), sample.begin() + d + 2);
    TabulatedFunction table = generic_table(nodes, "s");
    Scalar value = nabla_apply(table, "s", nodes).scalar_value();
    if (value.is_zero()) throw std::logic_error("generic witness vanished");
    return TowerWitness{std::move(nodes), std::move(value)};
}

std::string Tower::dump_json() const {
    nlohmann::json entries = nlohmann::json::array();
    // Ascending stage, then registration order: restore can parse each
    // element with all lower-stage symbols already known.
    std::vector<size_t> order(entries_.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        return entries_[a].stage < entries_[b].stage;
    });
    for (size_t i : order) {
        const Entry& e = entries_[i];
        entries.push_back({{"stage", e.stage}, {"element", e.element.str()},
                           {"symbol", e.symbol}});
    }
    nlohmann::json out{{"schema", 1}, {"ground", ground_->name()}, {"entries", entries}};
    return out.dump(2);
}

Tower Tower::restore_json(const std::string& text, FieldPtr ground) {
    nlohmann::json doc = nlohmann::json::parse(text);
    if (!doc.is_object() || doc.value("schema", 0) != 1)
        throw std::invalid_argument("unsupported registry schema");
    Tower tower(std::move(ground));
    if (doc.value("ground", tower.ground_->name()) != tower.ground_->name())
        throw std::invalid_argument("registry ground field mismatch");
    // Symbols usable as constants when parsing higher-stage element strings.
    std::map<std::string, Scalar> images;
    for (auto& e : doc.at("entries")) {
        long stage = e.at("stage").get<long>();
        std::string elem_text = e.at("element").get<std::string>();
        std::string symbol = e.at("symbol").get<std::string>();
        Scalar elem = parse_scalar(elem_text, tower.stage_field(static_cast<size_t>(stage)));
        if (stage >= 2) {
            // A flat parse reads every bracketed name as a top-layer variable;
            // rebind the ones that denote lower-stage symbols.
            std::map<std::string, Scalar> lower;
            for (auto& [name, img] : images)
                if (tower.stage_of(img) < stage) lower.emplace(name, img);
            elem = substitute_symbols(elem, lower);
        }
        elem = demote_constants(elem);
        if (tower.stage_of(elem) != stage)
            throw std::invalid_argument("entry " + elem_text + " does not live at stage " +
                                        std::to_string(stage));
        if (tower.is_registered(elem))
            throw std::invalid_argument("duplicate registry entry: " + elem_text);
        Scalar image = tower.apply(elem);
        const Entry& added = tower.entries_.back();
        if (added.symbol != symbol)
            throw std::invalid_argument("registry symbol mismatch: expected " + added.symbol +
                                        ", file has " + symbol);
        images.emplace(symbol, image);
    }
    return tower;
}

}  // namespace nablakit
