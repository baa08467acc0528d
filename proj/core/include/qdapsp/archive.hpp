#ifndef QDAPSP_ARCHIVE_HPP
#define QDAPSP_ARCHIVE_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <qdapsp/oracle.hpp>
#include <qdapsp/path.hpp>

namespace qdapsp {

enum class UpdateOutcome { Discarded, Inserted, Replaced, RejectedWorse };

const char* to_string(UpdateOutcome outcome) noexcept;

/// Result of a full rescan; used by tests and the engine's post-run check.
struct ArchiveAudit {
    std::size_t occupied = 0;
    std::size_t optimal = 0;
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }
};

/// Map-Elites grid with one cell per ordered pair of distinct nodes.
///
/// Each cell holds at most one path whose endpoints match the cell index.
/// Replacement accepts ties, so a cell's weight never increases. When an
/// oracle is attached the number of cells at their shortest-path distance is
/// tracked incrementally; the oracle must outlive the archive.
class Archive {
public:
    explicit Archive(std::size_t node_count, const OracleTables* oracle = nullptr);

    std::size_t node_count() const noexcept { return _n; }
    std::size_t cell_count() const noexcept { return _n * (_n - 1); }
    std::size_t occupied_count() const noexcept { return _occupied; }
    std::size_t optimal_count() const noexcept { return _optimal; }
    bool all_optimal() const noexcept { return _oracle && _optimal == cell_count(); }
    const OracleTables* oracle() const noexcept { return _oracle; }

    const std::optional<PathIndividual>& at(Cell cell) const { return _cells[cell.source * _n + cell.target]; }
    const std::optional<PathIndividual>& at(NodeId s, NodeId t) const { return _cells[s * _n + t]; }

    /// Uniform cell numbering over the n(n-1) off-diagonal cells.
    Cell cell_at(std::size_t index) const;

    UpdateOutcome update(Offspring candidate);

    /// Rescans every cell: index consistency, counters and, when an oracle
    /// is given, that no weight is below the true distance.
    ArchiveAudit audit(const OracleTables* oracle = nullptr) const;

    /// One line per occupied cell: "s t weight cardinality v1 v2 ... vk".
    void write_dump(std::ostream& os) const;

private:
    std::size_t _n;
    const OracleTables* _oracle;
    std::vector<std::optional<PathIndividual>> _cells;
    std::size_t _occupied = 0;
    std::size_t _optimal = 0;
};

/// Cell (s,t) holds the single-edge path for every edge (s,t); all other cells are empty.
Archive init_archive(const Graph& g, const OracleTables* oracle = nullptr);

/// Full rescan: every cell occupied and at its oracle distance.
bool is_complete_optimal(const Archive& archive, const OracleTables& oracle);

/// A parsed archive dump line; not validated against any graph.
struct DumpRecord {
    std::size_t line = 0;
    NodeId source = 0;
    NodeId target = 0;
    Weight weight = 0;
    std::size_t cardinality = 0;
    std::vector<NodeId> nodes;
};

/// Parses the dump format. Throws Error(Format) on malformed lines.
std::vector<DumpRecord> read_dump(std::istream& is);

} // namespace qdapsp

#endif
