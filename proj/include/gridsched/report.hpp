#pragma once

#include <string>

#include "gridsched/domain.hpp"

namespace gridsched {

// Hour-indexed commitment table: one 0/1 column per generator, one -1/0/1
// column per storage unit. Header only when the horizon is empty.
std::string render_state_table(const MicrogridSpec& spec, const Schedule& schedule);

// Hour-indexed dispatch + money table with a totals row.
std::string render_ledger_table(const MicrogridSpec& spec, const Schedule& schedule,
                                const DispatchLedger& ledger);

}  // namespace gridsched
