#include "zk/database.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include <json.hpp>

#include "zk/equivalence.hpp"
#include "zk/errors.hpp"

namespace zk {

std::optional<DbFormat> parse_db_format(std::string_view name) {
    if (name == "zkdb") return DbFormat::Zkdb;
    if (name == "json") return DbFormat::Json;
    return std::nullopt;
}

namespace {

constexpr std::string_view kHeader = "# zkdb v1";

auto group_key(const ClassificationResult& r) { return std::make_tuple(r.k, r.n, r.lattice.kind); }

std::vector<const ClassificationResult*> sorted_groups(const std::vector<ClassificationResult>& results) {
    std::vector<const ClassificationResult*> out;
    for (const auto& r : results) out.push_back(&r);
    std::stable_sort(out.begin(), out.end(),
                     [](const auto* a, const auto* b) { return group_key(*a) < group_key(*b); });
    return out;
}

// Representatives of a group with their types, in canonical order.
std::vector<std::pair<ZkCode, CodeType>> ordered_classes(const ClassificationResult& r) {
    if (r.types.size() != r.representatives.size())
        throw std::invalid_argument("classification result has mismatched type list");
    std::vector<std::pair<ZkCode, CodeType>> out;
    for (std::size_t i = 0; i < r.representatives.size(); ++i) out.emplace_back(r.representatives[i], r.types[i]);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

std::int64_t parse_int(std::string_view token, std::size_t line_no) {
    std::int64_t value = 0;
    const auto* end = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(token.data(), end, value);
    if (ec != std::errc{} || ptr != end || token.empty())
        throw FormatError("line " + std::to_string(line_no) + ": expected an integer, got '" + std::string(token) + "'");
    return value;
}

std::vector<std::string_view> split(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        const std::size_t j = line.find(' ', i);
        const std::size_t stop = j == std::string_view::npos ? line.size() : j;
        if (stop == i) throw FormatError("unexpected repeated space");
        out.push_back(line.substr(i, stop - i));
        if (j == std::string_view::npos) break;
        i = j + 1;
        if (i == line.size()) throw FormatError("trailing space");
    }
    return out;
}

std::string_view field(std::string_view token, std::string_view name, std::size_t line_no) {
    if (token.size() <= name.size() || token.substr(0, name.size()) != name || token[name.size()] != '=')
        throw FormatError("line " + std::to_string(line_no) + ": expected field '" + std::string(name) + "='");
    return token.substr(name.size() + 1);
}

}  // namespace

std::string format_zkdb(const std::vector<ClassificationResult>& results) {
    std::ostringstream out;
    out << kHeader << '\n';
    for (const auto* r : sorted_groups(results)) {
        std::size_t index = 1;
        for (const auto& [code, type] : ordered_classes(*r)) {
            out << "record k=" << r->k << " n=" << r->n << " lattice=" << lattice_tag(r->lattice.kind)
                << " type=" << to_string(type) << " index=" << index++ << '\n';
            const auto& g = code.generators();
            for (std::size_t row = 0; row < g.rows(); ++row) {
                for (std::size_t c = 0; c < g.cols(); ++c) out << (c ? " " : "") << g(row, c);
                out << '\n';
            }
            out << "end\n";
        }
    }
    return out.str();
}

std::vector<ClassificationResult> parse_zkdb(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start < text.size()) {
        const std::size_t nl = text.find('\n', start);
        if (nl == std::string_view::npos) throw FormatError("file does not end with a newline");
        lines.push_back(text.substr(start, nl - start));
        start = nl + 1;
    }
    if (lines.empty() || lines[0] != kHeader) throw FormatError("missing '# zkdb v1' header");

    std::vector<ClassificationResult> results;
    std::optional<decltype(group_key(ClassificationResult{}))> last_key;
    std::optional<ZkCode> last_code;
    std::size_t i = 1;
    while (i < lines.size()) {
        const std::size_t line_no = i + 1;
        const auto tokens = split(lines[i]);
        if (tokens.size() != 6 || tokens[0] != "record")
            throw FormatError("line " + std::to_string(line_no) + ": expected a record header");
        const std::int64_t k = parse_int(field(tokens[1], "k", line_no), line_no);
        const std::int64_t n = parse_int(field(tokens[2], "n", line_no), line_no);
        const auto kind = parse_lattice_tag(field(tokens[3], "lattice", line_no));
        const auto type_name = field(tokens[4], "type", line_no);
        const std::int64_t index = parse_int(field(tokens[5], "index", line_no), line_no);
        if (k < 2 || k > kMaxModulus || n < 1 || n > static_cast<std::int64_t>(kMaxClassifyLength) || !kind)
            throw FormatError("line " + std::to_string(line_no) + ": invalid record parameters");
        if (type_name != "I" && type_name != "II")
            throw FormatError("line " + std::to_string(line_no) + ": type must be I or II");
        const LatticeClass lattice{*kind, static_cast<std::size_t>(n)};
        const auto classes = lattice_classes(lattice.n);
        if (std::find(classes.begin(), classes.end(), lattice) == classes.end())
            throw FormatError("line " + std::to_string(line_no) + ": lattice does not match the length");

        std::vector<IntVector> rows;
        ++i;
        while (i < lines.size() && lines[i] != "end") {
            const auto entries = split(lines[i]);
            if (entries.size() != static_cast<std::size_t>(n))
                throw FormatError("line " + std::to_string(i + 1) + ": row has the wrong length");
            IntVector row;
            for (auto e : entries) {
                const std::int64_t v = parse_int(e, i + 1);
                if (v < 0 || v >= k) throw FormatError("line " + std::to_string(i + 1) + ": entry out of range");
                row.push_back(v);
            }
            rows.push_back(std::move(row));
            ++i;
        }
        if (i == lines.size()) throw FormatError("record starting at line " + std::to_string(line_no) + " has no 'end'");
        ++i;

        const ZkMatrix stored = ZkMatrix::from_rows(k, static_cast<std::size_t>(n), rows);
        ZkCode code(stored);
        if (code.generators() != stored)
            throw FormatError("record at line " + std::to_string(line_no) + ": generators are not in Howell form");

        const auto key = std::make_tuple(k, static_cast<std::size_t>(n), *kind);
        if (!last_key || *last_key != key) {
            if (last_key && key < *last_key)
                throw FormatError("line " + std::to_string(line_no) + ": records are not sorted");
            if (index != 1) throw FormatError("line " + std::to_string(line_no) + ": group must start at index 1");
            ClassificationResult r;
            r.k = k;
            r.n = static_cast<std::size_t>(n);
            r.lattice = lattice;
            results.push_back(std::move(r));
        } else {
            if (static_cast<std::size_t>(index) != results.back().representatives.size() + 1)
                throw FormatError("line " + std::to_string(line_no) + ": indices are not consecutive");
            if (!(*last_code < code))
                throw FormatError("line " + std::to_string(line_no) + ": records are not sorted");
        }
        auto& r = results.back();
        const CodeType type = type_name == "II" ? CodeType::TypeII : CodeType::TypeI;
        r.types.push_back(type);
        (type == CodeType::TypeII ? r.type_ii : r.type_i) += 1;
        r.representatives.push_back(code);
        last_key = key;
        last_code = std::move(code);
    }
    return results;
}

std::string format_json(const std::vector<ClassificationResult>& results) {
    nlohmann::json doc;
    doc["format"] = "zkdb";
    doc["version"] = 1;
    doc["results"] = nlohmann::json::array();
    for (const auto* r : sorted_groups(results)) {
        nlohmann::json entry;
        entry["k"] = r->k;
        entry["n"] = r->n;
        entry["lattice"] = std::string(lattice_tag(r->lattice.kind));
        entry["count"] = r->count();
        entry["type_counts"] = {{"I", r->type_i}, {"II", r->type_ii}};
        entry["seconds"] = r->seconds;
        entry["representatives"] = nlohmann::json::array();
        for (const auto& [code, type] : ordered_classes(*r))
            entry["representatives"].push_back(
                {{"type", std::string(to_string(type))}, {"generators", code.generators().row_vectors()}});
        doc["results"].push_back(std::move(entry));
    }
    return doc.dump(2) + "\n";
}

void export_db(const std::vector<ClassificationResult>& results, const std::filesystem::path& destination,
               DbFormat format) {
    const std::string body = format == DbFormat::Json ? format_json(results) : format_zkdb(results);
    auto temp = destination;
    temp += ".tmp";
    {
        std::ofstream out(temp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + temp.string());
        out << body;
        out.flush();
        if (!out) throw std::runtime_error("write to " + temp.string() + " failed");
    }
    std::error_code ec;
    std::filesystem::rename(temp, destination, ec);
    if (ec) {
        std::filesystem::remove(temp);
        throw std::runtime_error("cannot move database into " + destination.string() + ": " + ec.message());
    }
}

std::vector<ClassificationResult> import_db(const std::filesystem::path& source) {
    std::ifstream in(source, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + source.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_zkdb(buffer.str());
}

std::vector<std::string> verify_results(const std::vector<ClassificationResult>& results) {
    std::vector<std::string> problems;
    for (const auto& r : results) {
        const std::string where =
            "k=" + std::to_string(r.k) + " n=" + std::to_string(r.n) + " " + lattice_name(r.lattice) + ": ";
        if (r.types.size() != r.representatives.size()) {
            problems.push_back(where + "type list does not match representatives");
            continue;
        }
        if (r.type_i + r.type_ii != r.count()) problems.push_back(where + "type counts do not add up");
        if (r.count() > 0 && !allowed_length(r.k, r.n)) problems.push_back(where + "codes at an excluded length");
        for (std::size_t i = 0; i < r.count(); ++i) {
            const auto& c = r.representatives[i];
            const std::string item = where + "class " + std::to_string(i + 1) + ": ";
            if (c.modulus() != r.k || c.length() != r.n) {
                problems.push_back(item + "wrong parameters");
                continue;
            }
            const CodeType t = code_type(c);
            if (t == CodeType::NotSelfDual) {
                problems.push_back(item + "not self-dual");
                continue;
            }
            if (t != r.types[i]) problems.push_back(item + "type tag is wrong");
            if (t == CodeType::TypeII && (r.k % 2 != 0 || r.n % 8 != 0))
                problems.push_back(item + "Type II outside k even, 8 | n");
            if (identify_class(construction_a(c)) != r.lattice)
                problems.push_back(item + "Construction A gives a different lattice class");
            if (canonical_form(c) != c) problems.push_back(item + "not in canonical form");
            if (i > 0 && !(r.representatives[i - 1] < c)) problems.push_back(item + "duplicate or out of order");
        }
    }
    return problems;
}

}  // namespace zk
