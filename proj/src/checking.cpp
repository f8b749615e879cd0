#include "mbi/checking.hpp"

#include <limits>

namespace mbi {

std::string_view to_string(Status s) {
    switch (s) {
        case Status::Pass:
            return "pass";
        case Status::Fail:
            return "fail";
        case Status::Skipped:
            return "skipped";
    }
    return "?";
}

bool LawReport::passed() const {
    for (const auto& l : laws) {
        if (l.failed()) return false;
    }
    return true;
}

const CheckResult* LawReport::find(std::string_view law) const {
    for (const auto& l : laws) {
        if (l.name == law) return &l;
    }
    return nullptr;
}

std::vector<std::string> LawReport::failed_laws() const {
    std::vector<std::string> out;
    for (const auto& l : laws) {
        if (l.failed()) out.push_back(l.name);
    }
    return out;
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = 0;
    return __builtin_add_overflow(a, b, &r) ? std::numeric_limits<std::uint64_t>::max() : r;
}

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = 0;
    return __builtin_mul_overflow(a, b, &r) ? std::numeric_limits<std::uint64_t>::max() : r;
}

std::uint64_t sat_pow(std::uint64_t base, std::uint64_t exp) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < exp; ++i) r = sat_mul(r, base);
    return r;
}

CheckResult run_cases(std::string name, std::uint64_t space, std::uint64_t budget, std::uint64_t seed,
                      const std::function<std::optional<std::string>(std::uint64_t)>& visit) {
    CheckResult result;
    result.name = std::move(name);
    result.exhaustive = space <= budget;

    auto check = [&](std::uint64_t index) {
        ++result.cases;
        if (auto cx = visit(index)) {
            result.status = Status::Fail;
            result.counterexample = std::move(*cx);
            return false;
        }
        return true;
    };

    if (result.exhaustive) {
        for (std::uint64_t i = 0; i < space; ++i) {
            if (!check(i)) break;
        }
    } else {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<std::uint64_t> pick(0, space - 1);
        for (std::uint64_t k = 0; k < budget; ++k) {
            if (!check(pick(rng))) break;
        }
    }
    return result;
}

std::vector<std::uint64_t> mixed_radix(std::uint64_t index, const std::vector<std::uint64_t>& radices) {
    std::vector<std::uint64_t> digits(radices.size(), 0);
    for (std::size_t i = radices.size(); i-- > 0;) {
        digits[i] = index % radices[i];
        index /= radices[i];
    }
    return digits;
}

}  // namespace mbi
