#pragma once

// Indexable spaces of finite M-structures. Every structure in a space has an
// index in [0, count()), so checks can enumerate the space exhaustively or
// sample it by index.

#include "mbi/checking.hpp"
#include "mbi/uncertainty.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

namespace mbi {

/// How Stoch weight vectors are drawn: every composition of `denominator`
/// into positive parts, each part p giving weight p/denominator. With a
/// power-of-two denominator the weights are dyadic and exact even as floats.
struct WeightScheme {
    std::int64_t denominator = 4;
    bool as_float = false;
};

/// All weight vectors of length `len` under the scheme, in lexicographic
/// order of their parts.
std::vector<std::vector<Number>> weight_vectors(const WeightScheme& scheme, std::size_t len);

template <class A>
class StructureGenerator {
public:
    using Atom = std::function<A(std::uint64_t)>;

    /// Structures of `kind` whose entries are drawn from atoms [0, atom_count).
    /// Identity spaces hold exactly one entry regardless of the size bounds.
    StructureGenerator(Kind kind, Atom atom, std::uint64_t atom_count, std::size_t max_size,
                       bool allow_empty, WeightScheme weights = {})
        : kind_(kind),
          atom_(std::move(atom)),
          atom_count_(atom_count),
          max_size_(kind == Kind::Identity ? 1 : max_size),
          allow_empty_(kind == Kind::NonDet && allow_empty),
          weights_(weights) {
        for (std::size_t len = 0; len <= max_size_; ++len) {
            auto vecs = kind_ == Kind::Stoch ? weight_vectors(weights_, len) : std::vector<std::vector<Number>>{{}};
            std::uint64_t block = 0;
            if (len >= min_size()) block = sat_mul(sat_pow(atom_count_, len), vecs.size());
            blocks_.push_back(block);
            weight_table_.push_back(std::move(vecs));
            count_ = sat_add(count_, block);
        }
    }

    Kind kind() const { return kind_; }
    std::uint64_t count() const { return count_; }
    std::uint64_t atom_count() const { return atom_count_; }
    std::size_t max_size() const { return max_size_; }
    bool allow_empty() const { return allow_empty_; }
    const WeightScheme& weights() const { return weights_; }
    A atom(std::uint64_t i) const { return atom_(i); }

    MStruct<A> at(std::uint64_t index) const {
        std::size_t len = 0;
        for (; len < blocks_.size(); ++len) {
            if (index < blocks_[len]) break;
            index -= blocks_[len];
        }
        if (len == blocks_.size()) throw std::out_of_range("structure index out of range");
        const auto& vecs = weight_table_[len];
        std::uint64_t wi = index % vecs.size();
        index /= vecs.size();
        std::vector<std::uint64_t> radices(len, atom_count_);
        auto digits = mixed_radix(index, radices);
        std::vector<Outcome<A>> out;
        out.reserve(len);
        for (std::size_t i = 0; i < len; ++i) {
            Number w = kind_ == Kind::Stoch ? vecs[wi][i] : Number(1);
            out.push_back({atom_(digits[i]), w});
        }
        return MStruct<A>(kind_, std::move(out));
    }

    StructureGenerator with_max_size(std::size_t n) const {
        return StructureGenerator(kind_, atom_, atom_count_, n, allow_empty_, weights_);
    }

    StructureGenerator nonempty() const {
        return StructureGenerator(kind_, atom_, atom_count_, max_size_, false, weights_);
    }

private:
    std::size_t min_size() const { return allow_empty_ ? 0 : 1; }

    Kind kind_;
    Atom atom_;
    std::uint64_t atom_count_;
    std::size_t max_size_;
    bool allow_empty_;
    WeightScheme weights_;
    std::vector<std::uint64_t> blocks_;
    std::vector<std::vector<std::vector<Number>>> weight_table_;
    std::uint64_t count_ = 0;
};

/// Structures over a grid of values.
StructureGenerator<Number> value_structures(Kind kind, std::vector<Number> grid, std::size_t max_size,
                                            bool allow_empty, WeightScheme weights = {});

/// Structures whose entries are structures from `inner`; the outer level
/// shares inner's kind and weight scheme.
template <class A>
StructureGenerator<MStruct<A>> nest(const StructureGenerator<A>& inner, std::size_t max_size, bool allow_empty) {
    auto shared = std::make_shared<StructureGenerator<A>>(inner);
    return StructureGenerator<MStruct<A>>(
        inner.kind(), [shared](std::uint64_t i) { return shared->at(i); }, inner.count(), max_size, allow_empty,
        inner.weights());
}

/// Integer grid {lo, ..., hi}.
std::vector<Number> int_grid(std::int64_t lo, std::int64_t hi);

}  // namespace mbi
