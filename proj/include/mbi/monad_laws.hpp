#pragma once

#include "mbi/checking.hpp"
#include "mbi/generators.hpp"

namespace mbi {

/// Checks the eight monad laws on structures from `gen`:
/// mapPresId, mapPresComp, pureNatTrans, joinNatTrans, pureNeutralLeft,
/// pureNeutralRight, joinAssoc, bindJoinSpec.
///
/// Nested inputs are built from `gen` itself (same size bound). joinAssoc
/// uses depth-3 nests with at most two entries per level, i.e. at most eight
/// leaves. Each law runs exhaustively when its space fits in `budget`,
/// otherwise on `budget` indices sampled with `seed`.
LawReport check_monad_laws(Kind kind, const StructureGenerator<Number>& gen, std::uint64_t budget,
                           std::uint64_t seed, double tolerance = 1e-9);

/// pureNotEmpty, mapPresNotEmpty and bindPresNotEmpty (the continuation
/// only ever returns non-empty structures).
LawReport check_nonempty_preservation(Kind kind, const StructureGenerator<Number>& gen, std::uint64_t budget,
                                      std::uint64_t seed);

}  // namespace mbi
