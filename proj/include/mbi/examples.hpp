#pragma once

#include "mbi/policy.hpp"
#include "mbi/sdp.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace mbi::examples {

/// Emission problem with states {Good, Bad} and controls {Low, High} at every
/// step. Low keeps Good; High keeps Bad; every other choice may end in either
/// state. Rewards depend on control and reached state: Low/Good 3,
/// High/Good 2, Low/Bad 1, High/Bad 0. Natural-number values with + and <=.
/// The measure must be a NonDet catalog measure usable on the integer
/// carrier (min, max, sum, max_var, length).
SdpSpec climate_spec(std::string_view measure_name, std::size_t horizon = 3);

/// The climate problem with probabilities: the uncertain branches stay in
/// the current state with probability 4/5. Rational values, expected value.
SdpSpec stochastic_climate_spec(std::size_t horizon = 3);

/// Setup cost of an operation given the previous one ("" at the start).
///
///   start: A 5, C 3
///   after A: B 2, C 3, D 4      after B: C 3, D 1
///   after C: A 4, B 4, D 6      after D: A 3, B 3
///
/// Order totals: ABCD 16, ACBD 13, ACDB 17, CABD 10, CADB 14, CDAB 14.
const std::map<std::string, std::map<char, int>>& scheduling_costs();

/// Total setup cost of a complete order such as "CABD".
int scheduling_order_cost(std::string_view order);

/// The six complete orders with A before B and C before D.
std::vector<std::string> feasible_orders();

/// Deterministic ordering of operations A-D over three decisions. States
/// are the performed prefixes ("" at step 0), controls the operations that
/// keep the prefix admissible, rewards the negated setup costs (the last
/// decision also pays for the implied fourth operation), measure identity.
SdpSpec scheduling_spec();

/// Completes the final prefix reached from "" under ps with the missing
/// operation: the chosen processing order.
std::string scheduling_order(const Problem& problem, const PolicySeq& ps);

}  // namespace mbi::examples
