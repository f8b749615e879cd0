#include "mbi/uncertainty.hpp"

namespace mbi {

std::string_view to_string(Kind k) {
    switch (k) {
        case Kind::Identity:
            return "identity";
        case Kind::NonDet:
            return "nondet";
        case Kind::Stoch:
            return "stoch";
    }
    return "?";
}

std::optional<Kind> kind_from_string(std::string_view s) {
    if (s == "identity") return Kind::Identity;
    if (s == "nondet") return Kind::NonDet;
    if (s == "stoch") return Kind::Stoch;
    return std::nullopt;
}

}  // namespace mbi
