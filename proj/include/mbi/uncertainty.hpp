#pragma once

// The uncertainty monad M: finite structures of outcomes tagged Identity
// (exactly one outcome), NonDet (a list) or Stoch (a weighted list whose
// weights are positive and sum to one).

#include "mbi/number.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

namespace mbi {

enum class Kind { Identity, NonDet, Stoch };

std::string_view to_string(Kind k);
std::optional<Kind> kind_from_string(std::string_view s);

/// Raised when a structure would violate its kind's shape (an Identity
/// structure without exactly one outcome, a bad Stoch weight vector, or a
/// join across different kinds).
class StructureError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

template <class A>
struct Outcome {
    A value;
    /// Probability for Stoch; exact 1 for the other kinds.
    Number weight = Number(1);
};

template <class A>
class MStruct {
public:
    using value_type = A;

    static MStruct identity(A a) {
        MStruct m(Kind::Identity);
        m.outcomes_.push_back({std::move(a), Number(1)});
        return m;
    }

    static MStruct nondet(std::vector<A> values) {
        MStruct m(Kind::NonDet);
        m.outcomes_.reserve(values.size());
        for (auto& v : values) m.outcomes_.push_back({std::move(v), Number(1)});
        return m;
    }

    /// Checked: every weight positive, weights sum to one (exactly for
    /// exact weights, within `tolerance` once a float is involved).
    static MStruct stoch(std::vector<std::pair<A, Number>> entries, double tolerance = 1e-9) {
        MStruct m = stoch_unchecked(std::move(entries));
        if (auto problem = m.weight_problem(tolerance)) throw StructureError(*problem);
        return m;
    }

    /// For deserialization paths that report weight problems themselves.
    static MStruct stoch_unchecked(std::vector<std::pair<A, Number>> entries) {
        MStruct m(Kind::Stoch);
        m.outcomes_.reserve(entries.size());
        for (auto& [v, w] : entries) m.outcomes_.push_back({std::move(v), std::move(w)});
        return m;
    }

    /// Raw constructor used by the monad operations; enforces only the
    /// Identity shape.
    MStruct(Kind kind, std::vector<Outcome<A>> outcomes) : kind_(kind), outcomes_(std::move(outcomes)) {
        if (kind_ == Kind::Identity && outcomes_.size() != 1) {
            throw StructureError("Identity structure must hold exactly one outcome");
        }
    }

    Kind kind() const { return kind_; }
    std::size_t size() const { return outcomes_.size(); }
    bool empty() const { return outcomes_.empty(); }
    std::span<const Outcome<A>> outcomes() const { return outcomes_; }

    std::vector<A> values() const {
        std::vector<A> out;
        out.reserve(outcomes_.size());
        for (const auto& o : outcomes_) out.push_back(o.value);
        return out;
    }

    Number total_weight() const {
        Number s(0);
        for (const auto& o : outcomes_) s += o.weight;
        return s;
    }

    /// Describes why the Stoch weight invariant fails, if it does.
    std::optional<std::string> weight_problem(double tolerance) const {
        if (kind_ != Kind::Stoch) return std::nullopt;
        for (const auto& o : outcomes_) {
            if (!o.weight.is_positive()) return "non-positive weight " + o.weight.str();
        }
        Number total = total_weight();
        if (!approx_equal(total, Number(1), tolerance)) return "weights sum to " + total.str() + ", not 1";
        return std::nullopt;
    }

    /// Entry-sequence equality: same kind, same values in the same order,
    /// same weights.
    friend bool operator==(const MStruct& a, const MStruct& b) {
        if (a.kind_ != b.kind_ || a.outcomes_.size() != b.outcomes_.size()) return false;
        for (std::size_t i = 0; i < a.outcomes_.size(); ++i) {
            if (!(a.outcomes_[i].value == b.outcomes_[i].value)) return false;
            if (!(a.outcomes_[i].weight == b.outcomes_[i].weight)) return false;
        }
        return true;
    }

private:
    explicit MStruct(Kind kind) : kind_(kind) {}

    Kind kind_;
    std::vector<Outcome<A>> outcomes_;
};

template <class T>
struct is_mstruct : std::false_type {};
template <class A>
struct is_mstruct<MStruct<A>> : std::true_type {};

template <class A>
MStruct<A> pure(Kind kind, A a) {
    return MStruct<A>(kind, {Outcome<A>{std::move(a), Number(1)}});
}

template <class F, class A>
auto map(F&& f, const MStruct<A>& ma) {
    using B = std::decay_t<std::invoke_result_t<F&, const A&>>;
    std::vector<Outcome<B>> out;
    out.reserve(ma.size());
    for (const auto& o : ma.outcomes()) out.push_back({std::invoke(f, o.value), o.weight});
    return MStruct<B>(ma.kind(), std::move(out));
}

/// Outer-then-inner concatenation; Stoch weights multiply. Duplicate values
/// are kept as separate entries.
template <class A>
MStruct<A> join(const MStruct<MStruct<A>>& mma) {
    std::vector<Outcome<A>> out;
    for (const auto& outer : mma.outcomes()) {
        if (outer.value.kind() != mma.kind()) {
            throw StructureError("join: inner structure kind " + std::string(to_string(outer.value.kind())) +
                                 " differs from outer kind " + std::string(to_string(mma.kind())));
        }
        for (const auto& inner : outer.value.outcomes()) {
            out.push_back({inner.value, inner.weight * outer.weight});
        }
    }
    return MStruct<A>(mma.kind(), std::move(out));
}

/// Direct concatMap; kept separate from join(map(...)) so that the
/// bind/join identity is a genuine check.
template <class A, class F>
auto bind(const MStruct<A>& ma, F&& f) {
    using MB = std::decay_t<std::invoke_result_t<F&, const A&>>;
    using B = typename MB::value_type;
    std::vector<Outcome<B>> out;
    for (const auto& o : ma.outcomes()) {
        MB mb = std::invoke(f, o.value);
        if (mb.kind() != ma.kind()) {
            throw StructureError("bind: continuation returned kind " + std::string(to_string(mb.kind())) +
                                 " for a " + std::string(to_string(ma.kind())) + " structure");
        }
        for (const auto& inner : mb.outcomes()) out.push_back({inner.value, inner.weight * o.weight});
    }
    return MStruct<B>(ma.kind(), std::move(out));
}

template <class A>
bool is_not_empty(const MStruct<A>& ma) {
    return !ma.empty();
}

// Text rendering used in counter-examples and CLI output.

inline std::string describe(const Number& n) { return n.str(); }
inline std::string describe(const std::string& s) { return s; }

template <class A>
std::string describe(const MStruct<A>& ma) {
    std::ostringstream os;
    if (ma.kind() == Kind::Identity) {
        os << "Id(" << describe(ma.outcomes()[0].value) << ")";
        return os.str();
    }
    os << "[";
    bool first = true;
    for (const auto& o : ma.outcomes()) {
        if (!first) os << ", ";
        first = false;
        if (ma.kind() == Kind::Stoch) {
            os << "(" << describe(o.value) << ", " << o.weight.str() << ")";
        } else {
            os << describe(o.value);
        }
    }
    os << "]";
    return os.str();
}

/// Entry-sequence equality with an absolute tolerance on numeric values and
/// weights. Non-numeric values compare with ==.
template <class A>
bool equal_within(const MStruct<A>& a, const MStruct<A>& b, double tolerance) {
    if (a.kind() != b.kind() || a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const auto& x = a.outcomes()[i];
        const auto& y = b.outcomes()[i];
        if constexpr (std::is_same_v<A, Number>) {
            if (!approx_equal(x.value, y.value, tolerance)) return false;
        } else if constexpr (is_mstruct<A>::value) {
            if (!equal_within(x.value, y.value, tolerance)) return false;
        } else {
            if (!(x.value == y.value)) return false;
        }
        if (!approx_equal(x.weight, y.weight, tolerance)) return false;
    }
    return true;
}

}  // namespace mbi
