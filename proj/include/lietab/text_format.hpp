#ifndef LIETAB_TEXT_FORMAT_HPP
#define LIETAB_TEXT_FORMAT_HPP

#include <string>

#include "lietab/model.hpp"

namespace lietab {

/// Human-readable rendering: one aligned block per group (classes, then the
/// class-function values), per Green table, per multiplicity matrix, per
/// split datum and per numeric table, with guard headers where a block is
/// only valid under a congruence condition on q.
std::string render_text(const Model& m);

}  // namespace lietab

#endif
