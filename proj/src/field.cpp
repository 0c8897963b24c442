#include "nablakit/field.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace nablakit {

namespace {
std::mutex g_cache_mutex;
}

FieldPtr Field::rationals() {
    static FieldPtr q(new Field(Kind::Rationals, 0, nullptr));
    return q;
}

FieldPtr Field::prime(std::uint64_t p) {
    if (p < 2) throw std::invalid_argument("prime field needs p >= 2");
    if (p >= (std::uint64_t(1) << 62))
        throw std::invalid_argument("prime field modulus too large");
    // Cheap primality check; moduli are small in practice.
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) throw std::invalid_argument("prime field modulus not prime");
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    static std::map<std::uint64_t, FieldPtr> cache;
    auto it = cache.find(p);
    if (it == cache.end())
        it = cache.emplace(p, FieldPtr(new Field(Kind::Prime, p, nullptr))).first;
    return it->second;
}

FieldPtr Field::function(const FieldPtr& base) {
    if (!base) throw std::invalid_argument("function field needs a base field");
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    static std::map<const Field*, FieldPtr> cache;
    auto it = cache.find(base.get());
    if (it == cache.end())
        it = cache.emplace(base.get(), FieldPtr(new Field(Kind::Function, 0, base))).first;
    return it->second;
}

int Field::depth() const {
    int d = 0;
    const Field* f = this;
    while (f->kind_ == Kind::Function) {
        ++d;
        f = f->base_.get();
    }
    return d;
}

bool Field::equals(const Field& other) const {
    if (this == &other) return true;
    if (kind_ != other.kind_) return false;
    switch (kind_) {
        case Kind::Rationals: return true;
        case Kind::Prime: return p_ == other.p_;
        case Kind::Function: return base_->equals(*other.base_);
    }
    return false;
}

bool Field::embeds_into(const Field& ext) const {
    const Field* f = &ext;
    while (true) {
        if (equals(*f)) return true;
        if (f->kind_ != Kind::Function) return false;
        f = f->base_.get();
    }
}

std::string Field::name() const {
    switch (kind_) {
        case Kind::Rationals: return "Q";
        case Kind::Prime: return "F" + std::to_string(p_);
        case Kind::Function: return base_->name() + "(..)";
    }
    return "?";
}

bool same_field(const FieldPtr& a, const FieldPtr& b) {
    if (a.get() == b.get()) return true;
    if (!a || !b) return false;
    return a->equals(*b);
}

FieldPtr join_fields(const FieldPtr& a, const FieldPtr& b) {
    if (same_field(a, b)) return a;
    if (a->embeds_into(*b)) return b;
    if (b->embeds_into(*a)) return a;
    throw std::invalid_argument("incompatible fields: " + a->name() + " vs " + b->name());
}

}  // namespace nablakit
