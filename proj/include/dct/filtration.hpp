#pragma once

#include <json.hpp>
#include <map>

#include "dct/crossprod.hpp"

namespace dct {

/// Marking of every generated square in half-integer stages: 0 for
/// globular and unit squares, k for squares first reached by vertical
/// closure at stage k, k+1/2 for squares first reached by horizontal
/// closure at stage k. Witnesses record one derivation from generators,
/// written as s-expressions over atoms g:<cell> and u:<morphism> with
/// nodes (v top bottom) and (h left right).
struct MarkingReport {
    std::map<Id, int> marking2x;      // square -> 2 * marking
    std::map<Id, std::string> witness;
    int length = 1;
    bool globularly_generated = true;

    bool operator==(const MarkingReport&) const = default;

    [[nodiscard]] static std::string render_marking(int twice);
};

enum class SweepOrder { Forward, Reverse };

/// Iterates vertical and horizontal closure of the 0-marked squares until
/// stable. The sweep order only affects internal traversal; results are
/// order-independent.
[[nodiscard]] MarkingReport vertical_filtration(const DoubleCatModel& m, SweepOrder order = SweepOrder::Forward);

/// Smallest sub-model closed under both compositions that contains every
/// globular and unit square.
[[nodiscard]] DoubleCatModel globularly_generated_piece(const DoubleCatModel& m);

/// Minimal stabilization stage of the vertical filtration on the
/// globularly generated piece.
[[nodiscard]] int length(const DoubleCatModel& m);

[[nodiscard]] nlohmann::ordered_json report_to_json(const MarkingReport& r);

}  // namespace dct
