#include <qdapsp/archive.hpp>

#include <istream>
#include <ostream>
#include <sstream>

namespace qdapsp {

const char* to_string(UpdateOutcome outcome) noexcept
{
    switch (outcome) {
    case UpdateOutcome::Discarded: return "Discarded";
    case UpdateOutcome::Inserted: return "Inserted";
    case UpdateOutcome::Replaced: return "Replaced";
    case UpdateOutcome::RejectedWorse: return "RejectedWorse";
    }
    return "Unknown";
}

Archive::Archive(std::size_t node_count, const OracleTables* oracle)
    : _n(node_count), _oracle(oracle), _cells(node_count * node_count)
{
    if (_n < 2)
        throw Error(ErrorCode::SizeTooSmall, "archive needs at least two nodes");
    if (_oracle && _oracle->node_count() != _n)
        throw Error(ErrorCode::InvalidConfig, "oracle size does not match archive");
}

Cell Archive::cell_at(std::size_t index) const
{
    const auto s = static_cast<NodeId>(index / (_n - 1));
    const auto column = static_cast<NodeId>(index % (_n - 1));
    return {s, column < s ? column : column + 1};
}

UpdateOutcome Archive::update(Offspring candidate)
{
    if (!candidate)
        return UpdateOutcome::Discarded;
    const Cell cell = candidate->cell();
    auto& slot = _cells[cell.source * _n + cell.target];
    const Weight weight = candidate->weight();

    UpdateOutcome outcome;
    bool was_optimal = false;
    if (!slot) {
        ++_occupied;
        outcome = UpdateOutcome::Inserted;
    } else if (weight <= slot->weight()) {
        was_optimal = _oracle && slot->weight() == _oracle->dist(cell.source, cell.target);
        outcome = UpdateOutcome::Replaced;
    } else {
        return UpdateOutcome::RejectedWorse;
    }
    if (_oracle && !was_optimal && weight == _oracle->dist(cell.source, cell.target))
        ++_optimal;
    slot = std::move(candidate);
    return outcome;
}

ArchiveAudit Archive::audit(const OracleTables* oracle) const
{
    if (!oracle)
        oracle = _oracle;
    ArchiveAudit report;
    for (NodeId s = 0; s < _n; ++s) {
        if (at(s, s))
            report.violations.push_back("diagonal cell " + std::to_string(s) + " occupied");
        for (NodeId t = 0; t < _n; ++t) {
            if (s == t || !at(s, t))
                continue;
            const PathIndividual& p = *at(s, t);
            ++report.occupied;
            if (p.source() != s || p.target() != t) {
                report.violations.push_back("cell (" + std::to_string(s) + "," + std::to_string(t) +
                                            ") holds a path " + format_path(p));
            }
            if (oracle) {
                const Weight d = oracle->dist(s, t);
                if (p.weight() < d)
                    report.violations.push_back("cell (" + std::to_string(s) + "," + std::to_string(t) +
                                                ") weight below distance");
                if (p.weight() == d)
                    ++report.optimal;
            }
        }
    }
    if (report.occupied != _occupied)
        report.violations.push_back("occupied counter " + std::to_string(_occupied) + " but rescan found " +
                                    std::to_string(report.occupied));
    if (_oracle && oracle == _oracle && report.optimal != _optimal)
        report.violations.push_back("optimal counter " + std::to_string(_optimal) + " but rescan found " +
                                    std::to_string(report.optimal));
    return report;
}

void Archive::write_dump(std::ostream& os) const
{
    for (NodeId s = 0; s < _n; ++s)
        for (NodeId t = 0; t < _n; ++t) {
            if (s == t || !at(s, t))
                continue;
            const PathIndividual& p = *at(s, t);
            os << s << ' ' << t << ' ' << p.weight() << ' ' << p.cardinality() << ' ' << format_path(p) << '\n';
        }
}

Archive init_archive(const Graph& g, const OracleTables* oracle)
{
    Archive archive(g.node_count(), oracle);
    for (const Edge& e : g.edges())
        archive.update(PathIndividual({e.tail, e.head}, e.weight));
    return archive;
}

bool is_complete_optimal(const Archive& archive, const OracleTables& oracle)
{
    if (oracle.node_count() != archive.node_count())
        return false;
    const std::size_t n = archive.node_count();
    for (NodeId s = 0; s < n; ++s)
        for (NodeId t = 0; t < n; ++t) {
            if (s == t)
                continue;
            const auto& cell = archive.at(s, t);
            if (!cell || cell->weight() != oracle.dist(s, t))
                return false;
        }
    return true;
}

std::vector<DumpRecord> read_dump(std::istream& is)
{
    std::vector<DumpRecord> records;
    std::string text;
    std::size_t line_no = 0;
    while (std::getline(is, text)) {
        ++line_no;
        if (text.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        std::istringstream line(text);
        DumpRecord r;
        r.line = line_no;
        long long s = -1, t = -1, card = -1;
        if (!(line >> s >> t >> r.weight >> card) || s < 0 || t < 0 || card < 0)
            throw Error(ErrorCode::Format, "dump line " + std::to_string(line_no) + ": expected \"s t weight cardinality nodes...\"");
        r.source = static_cast<NodeId>(s);
        r.target = static_cast<NodeId>(t);
        r.cardinality = static_cast<std::size_t>(card);
        long long v = 0;
        while (line >> v) {
            if (v < 0)
                throw Error(ErrorCode::Format, "dump line " + std::to_string(line_no) + ": negative node id");
            r.nodes.push_back(static_cast<NodeId>(v));
        }
        if (!line.eof())
            throw Error(ErrorCode::Format, "dump line " + std::to_string(line_no) + ": non-numeric node id");
        records.push_back(std::move(r));
    }
    return records;
}

} // namespace qdapsp
