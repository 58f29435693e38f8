#pragma once

#include <vector>

#include "cts/geometry.hpp"

namespace cts {

enum class SeqKind { Start, Task, Destination };

struct SequenceEntry {
    Vertex vertex;
    SeqKind kind = SeqKind::Task;
    int task_id = 0;  // 1-based when this entry completes a task, else 0

    friend bool operator==(const SequenceEntry&, const SequenceEntry&) = default;
    friend auto operator<=>(const SequenceEntry&, const SequenceEntry&) = default;
};

// One agent's ordered target list: start, its tasks in visit order, then the
// destination (CTS) or nothing after the last task (MG). cost ignores conflicts.
struct TaskSequence {
    int agent_id = 0;  // 1-based
    std::vector<SequenceEntry> entries;
    Cost cost = 0;

    friend bool operator==(const TaskSequence&, const TaskSequence&) = default;
};

struct JointSequence {
    std::vector<TaskSequence> sequences;  // indexed by agent (id-1)
    std::vector<int> ranks;               // priority vector, ranks[i] >= 1
    Cost cost = 0;
};

inline Cost sequence_cost(const JointSequence& joint) {
    Cost total = 0;
    for (const auto& s : joint.sequences) total = saturating_add(total, s.cost);
    return total;
}

}  // namespace cts
