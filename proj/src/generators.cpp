#include "mbi/generators.hpp"

#include <memory>

namespace mbi {

namespace {

void compositions(std::int64_t remaining, std::size_t parts, std::vector<std::int64_t>& current,
                  std::vector<std::vector<std::int64_t>>& out) {
    if (parts == 0) {
        if (remaining == 0) out.push_back(current);
        return;
    }
    for (std::int64_t p = 1; p <= remaining - static_cast<std::int64_t>(parts - 1); ++p) {
        current.push_back(p);
        compositions(remaining - p, parts - 1, current, out);
        current.pop_back();
    }
}

}  // namespace

std::vector<std::vector<Number>> weight_vectors(const WeightScheme& scheme, std::size_t len) {
    std::vector<std::vector<std::int64_t>> parts;
    std::vector<std::int64_t> current;
    if (len > 0) compositions(scheme.denominator, len, current, parts);
    std::vector<std::vector<Number>> out;
    out.reserve(parts.size());
    for (const auto& c : parts) {
        std::vector<Number> w;
        w.reserve(c.size());
        for (auto p : c) {
            Number exact = Number::ratio(p, scheme.denominator);
            w.push_back(scheme.as_float ? Number(exact.as_double()) : exact);
        }
        out.push_back(std::move(w));
    }
    return out;
}

StructureGenerator<Number> value_structures(Kind kind, std::vector<Number> grid, std::size_t max_size,
                                            bool allow_empty, WeightScheme weights) {
    auto values = std::make_shared<const std::vector<Number>>(std::move(grid));
    return StructureGenerator<Number>(
        kind, [values](std::uint64_t i) { return (*values)[i]; }, values->size(), max_size, allow_empty, weights);
}

std::vector<Number> int_grid(std::int64_t lo, std::int64_t hi) {
    std::vector<Number> out;
    for (std::int64_t i = lo; i <= hi; ++i) out.emplace_back(i);
    return out;
}

}  // namespace mbi
