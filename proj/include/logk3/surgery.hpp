#pragma once

#include "logk3/boundary.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace logk3 {

// All component indices are 0-based here; file formats use 1-based labels and
// convert at the document layer.

struct CanonicalBlowup {
    // Adjacent pair of components; (k, k) designates the node of a nodal
    // boundary (only k = 0 is meaningful there).  For a 2-cycle the two
    // orderings (0,1) / (1,0) place the exceptional component after the
    // first-named one.
    int i = 0;
    int j = 0;
    // Which of the two intersection points, for 2-cycles and nodal curves.
    // Pure trace bookkeeping: the lattice cannot distinguish the points.
    int point_index = 0;
    bool operator==(const CanonicalBlowup&) const = default;
};

struct CanonicalBlowdown {
    int component = 0;
    bool operator==(const CanonicalBlowdown&) const = default;
};

enum class PivotDirection { Succ, Pred };

struct Pivot {
    int component = 0;
    PivotDirection direction = PivotDirection::Succ;
    bool operator==(const Pivot&) const = default;
};

struct HalfPointAttach {
    int component = 0;
    bool operator==(const HalfPointAttach&) const = default;
};

using SurgeryStep = std::variant<CanonicalBlowup, CanonicalBlowdown, Pivot, HalfPointAttach>;
using SurgeryScript = std::vector<SurgeryStep>;

// One applied step.  In full-lattice mode `embed` / `push` carry the class
// maps (a pivot has both: its blowup followed by its contraction), and
// `exceptional` is the exceptional class in the post-blowup lattice.
struct TraceEntry {
    SurgeryStep step;
    BoundaryShape before;
    BoundaryShape after;
    std::optional<LatticeMap> embed;
    std::optional<LatticeMap> push;
    std::optional<DivisorClass> exceptional;
};

struct SurgeryTrace {
    BoundaryShape initial;
    std::vector<TraceEntry> entries;
    std::vector<std::pair<std::string, DivisorClass>> tracked_classes;
};

// A step whose precondition failed while running a script; remembers which
// one (0-based).
struct ScriptError : std::runtime_error {
    size_t step_index;
    ScriptError(size_t idx, const std::string& reason)
        : std::runtime_error("step " + std::to_string(idx) + ": " + reason), step_index(idx) {}
};

std::pair<LogSurfacePair, TraceEntry> canonical_blowup(const LogSurfacePair& s,
                                                       std::pair<int, int> edge,
                                                       int point_index = 0);
std::pair<LogSurfacePair, TraceEntry> canonical_blowdown(const LogSurfacePair& s, int component);
std::pair<LogSurfacePair, TraceEntry> pivot(const LogSurfacePair& s, int component,
                                            PivotDirection direction);
std::pair<LogSurfacePair, TraceEntry> half_point_attach(const LogSurfacePair& s, int component);

std::pair<LogSurfacePair, TraceEntry> apply_step(const LogSurfacePair& s, const SurgeryStep& step);

// Applies the steps in order, collecting the full trace.  Tracked classes are
// carried by total transform.  The first failing step aborts with a
// ScriptError naming its index; nothing partial is returned.
std::pair<LogSurfacePair, SurgeryTrace> run_script(
    const LogSurfacePair& s, const SurgeryScript& script,
    std::vector<std::pair<std::string, DivisorClass>> tracked = {});

// Total transform of a class from the initial lattice of the trace, minus
// mult_s times the exceptional class of each multiplicity-carrying step
// (canonical blowups and half point attachments, in script order).  Pivots
// and blowdowns contribute their composite maps with no multiplicity choice.
DivisorClass proper_transform(const SurgeryTrace& trace, const DivisorClass& cls,
                              const std::vector<Int>& mults);

// Applies an entry's class maps (embed then push, as present) to a class.
DivisorClass total_transform_step(const TraceEntry& entry, const DivisorClass& cls);

} // namespace logk3
