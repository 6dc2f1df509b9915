#ifndef SPSLICE_SLICEGEOM_PROOF_REPORT_HPP
#define SPSLICE_SLICEGEOM_PROOF_REPORT_HPP

#include <algorithm>
#include <string>
#include <vector>

namespace spslice::geom {

/// One checked identity or property, with the polynomial/matrix/equality
/// that witnesses it (or the counterexample when it fails).
struct ProofItem {
    std::string id;
    std::string statement;
    bool passed = false;
    std::string witness;
};

struct ProofReport {
    std::string name;
    std::vector<ProofItem> items;

    ProofItem& add(std::string id, std::string statement, bool passed, std::string witness)
    {
        items.push_back({std::move(id), std::move(statement), passed, std::move(witness)});
        return items.back();
    }
    bool passed() const
    {
        return std::all_of(items.begin(), items.end(), [](const ProofItem& i) { return i.passed; });
    }
    const ProofItem* find(const std::string& id) const
    {
        for (const auto& i : items)
            if (i.id == id) return &i;
        return nullptr;
    }
};

} // namespace spslice::geom

#endif
