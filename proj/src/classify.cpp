#include "zk/classify.hpp"

#include <chrono>
#include <stdexcept>
#include <string>

#include "zk/equivalence.hpp"
#include "zk/frame.hpp"
#include "zk/reference_counts.hpp"

namespace zk {

std::optional<Tier> parse_tier(std::string_view name) {
    if (name == "standard") return Tier::Standard;
    if (name == "extended") return Tier::Extended;
    return std::nullopt;
}

bool ClassificationResult::same_classes(const ClassificationResult& other) const {
    return k == other.k && n == other.n && lattice == other.lattice && representatives == other.representatives &&
           types == other.types;
}

ClassificationResult classify(std::int64_t k, std::size_t n, LatticeClass lattice, const ClassifyOptions& opts) {
    check_modulus(k);
    if (n == 0 || n > kMaxClassifyLength)
        throw std::invalid_argument("classify: length must lie in [1, " + std::to_string(kMaxClassifyLength) + "]");
    if (lattice.n != n) throw std::invalid_argument("classify: lattice dimension differs from the code length");
    if (opts.tier == Tier::Standard && n > kStandardTierMaxLength)
        throw std::invalid_argument("classify: length " + std::to_string(n) + " requires the extended tier");

    const auto start = std::chrono::steady_clock::now();
    ClassificationResult result;
    result.k = k;
    result.n = n;
    result.lattice = lattice;
    if (!allowed_length(k, n) && !opts.search_excluded_lengths) return result;

    SearchOptions search;
    search.jobs = opts.jobs;
    if (opts.budget_seconds)
        search.deadline = start + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                      std::chrono::duration<double>(*opts.budget_seconds));

    const auto l = standard_lattice(lattice);
    const auto frames = frame_orbit_representatives(l, k, search);
    result.frames = frames.size();

    std::vector<ZkCode> codes;
    codes.reserve(frames.size());
    for (const auto& f : frames) codes.push_back(project_frame(l, f));
    result.representatives = dedupe(codes, opts.jobs, search.deadline);

    const bool even = is_even(l);
    for (const auto& c : result.representatives) {
        const CodeType t = code_type(c);
        if (t == CodeType::NotSelfDual) throw std::logic_error("classify: produced a code that is not self-dual");
        if ((t == CodeType::TypeII) != even)
            throw std::logic_error("classify: code type disagrees with the parity of the lattice");
        result.types.push_back(t);
        (t == CodeType::TypeII ? result.type_ii : result.type_i) += 1;
    }
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

std::vector<ClassificationResult> classify_length(std::int64_t k, std::size_t n, const ClassifyOptions& opts) {
    std::vector<ClassificationResult> out;
    for (const auto& cls : lattice_classes(n)) out.push_back(classify(k, n, cls, opts));
    return out;
}

std::map<std::int64_t, std::size_t> table_n4(std::int64_t from, std::int64_t to, const ClassifyOptions& opts) {
    if (from < 2 || to < from) throw std::invalid_argument("table_n4: invalid range");
    std::map<std::int64_t, std::size_t> out;
    for (std::int64_t k = from; k <= to; ++k) out[k] = classify(k, 4, LatticeClass::zn(4), opts).count();
    return out;
}

std::vector<TypeBalance> length8_type_balance(const std::vector<ClassificationResult>& results) {
    std::map<std::int64_t, std::pair<std::optional<std::size_t>, std::optional<std::size_t>>> by_k;
    for (const auto& r : results) {
        if (r.n != 8 || r.k % 2 != 0) continue;
        auto& slot = by_k[r.k];
        if (r.lattice.kind == LatticeKind::Zn) slot.first = r.type_i + r.type_ii;
        if (r.lattice.kind == LatticeKind::E8) slot.second = r.type_i + r.type_ii;
    }
    std::vector<TypeBalance> out;
    for (const auto& [k, counts] : by_k) {
        if (!counts.first || !counts.second) continue;
        TypeBalance b{k, *counts.first, *counts.second, false};
        b.as_expected = k == 2 ? b.type_i == b.type_ii : b.type_i > b.type_ii;
        out.push_back(b);
    }
    return out;
}

std::optional<std::size_t> reference_count(std::int64_t k, LatticeClass lattice) {
    if (lattice.n == 4 && lattice.kind == LatticeKind::Zn && k >= reference::kMinLength4K &&
        k <= reference::kMaxLength4K)
        return static_cast<std::size_t>(reference::kLength4Counts[static_cast<std::size_t>(k - reference::kMinLength4K)]);
    if (k < reference::kMinTabulatedK || k > reference::kMaxTabulatedK) return std::nullopt;
    std::size_t column = 0;
    switch (lattice.kind) {
        case LatticeKind::Zn:
            if (lattice.n < 1 || lattice.n > 9) return std::nullopt;
            column = lattice.n - 1;
            break;
        case LatticeKind::E8: column = reference::kE8Column; break;
        case LatticeKind::E8plusZ: column = reference::kE8PlusZColumn; break;
    }
    return static_cast<std::size_t>(
        reference::kCountsByLattice[static_cast<std::size_t>(k - reference::kMinTabulatedK)][column]);
}

}  // namespace zk
