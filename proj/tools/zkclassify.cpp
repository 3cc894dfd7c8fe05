// zkclassify: command-line driver for self-dual Z_k-code classification.

#include <algorithm>
#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "zk/classify.hpp"
#include "zk/database.hpp"
#include "zk/detail/parallel.hpp"
#include "zk/errors.hpp"

namespace {

enum Exit { kOk = 0, kMismatch = 1, kBudget = 2, kInput = 3 };

struct Global {
    unsigned jobs = 1;
    std::optional<double> budget_seconds;
};

struct Job {
    std::int64_t k;
    zk::LatticeClass lattice;
};

// One outcome per job; a job that ran out of budget has no result.
struct Outcome {
    std::optional<zk::ClassificationResult> result;
    bool over_budget = false;
};

zk::ClassifyOptions job_options(const Global& g, zk::Tier tier) {
    zk::ClassifyOptions o;
    o.jobs = 1;
    o.budget_seconds = g.budget_seconds;
    o.tier = tier;
    return o;
}

// Independent (k, n, lattice) jobs on a pool of g.jobs workers. Input errors
// propagate; budget exhaustion is recorded per job.
std::vector<Outcome> run_jobs(const std::vector<Job>& jobs, const Global& g, zk::Tier tier) {
    std::vector<Outcome> out(jobs.size());
    zk::ClassifyOptions opts = job_options(g, tier);
    // A single job may use the whole pool itself.
    if (jobs.size() == 1) opts.jobs = g.jobs;
    zk::detail::parallel_for(jobs.size(), g.jobs, [&](std::size_t i) {
        try {
            out[i].result = zk::classify(jobs[i].k, jobs[i].lattice.n, jobs[i].lattice, opts);
        } catch (const zk::BudgetExceeded&) {
            out[i].over_budget = true;
        }
    });
    return out;
}

zk::Tier parse_tier_or_throw(const std::string& name) {
    const auto t = zk::parse_tier(name);
    if (!t) throw std::invalid_argument("unknown tier '" + name + "'");
    return *t;
}

std::size_t tier_max_length(zk::Tier tier) {
    return tier == zk::Tier::Standard ? zk::kStandardTierMaxLength : zk::kMaxClassifyLength;
}

std::string cell(const Outcome& o) { return o.result ? std::to_string(o.result->count()) : "?"; }

int cmd_classify(const Global& g, std::int64_t k, std::size_t n, const std::string& lattice_tag,
                 const std::string& tier_name, const std::string& out_path, bool verify) {
    const zk::Tier tier = parse_tier_or_throw(tier_name);
    std::vector<Job> jobs;
    if (lattice_tag.empty()) {
        for (const auto& cls : zk::lattice_classes(n)) jobs.push_back({k, cls});
    } else {
        const auto kind = zk::parse_lattice_tag(lattice_tag);
        if (!kind) throw std::invalid_argument("unknown lattice '" + lattice_tag + "'");
        const zk::LatticeClass cls{*kind, n};
        const auto all = zk::lattice_classes(n);
        if (std::find(all.begin(), all.end(), cls) == all.end())
            throw std::invalid_argument("lattice " + lattice_tag + " does not exist in dimension " + std::to_string(n));
        jobs.push_back({k, cls});
    }
    const auto outcomes = run_jobs(jobs, g, tier);

    int status = kOk;
    std::vector<zk::ClassificationResult> done;
    std::cout << "k\tn\tlattice\tclasses\ttype_I\ttype_II\tframes\tseconds\treference\n";
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        const auto ref = zk::reference_count(k, jobs[i].lattice);
        const std::string ref_text = ref ? std::to_string(*ref) : "-";
        const auto& o = outcomes[i];
        if (!o.result) {
            std::cout << k << '\t' << n << '\t' << zk::lattice_name(jobs[i].lattice) << "\t?\t?\t?\t?\t?\t" << ref_text
                      << '\n';
            status = kBudget;
            continue;
        }
        const auto& r = *o.result;
        std::cout << k << '\t' << n << '\t' << zk::lattice_name(r.lattice) << '\t' << r.count() << '\t' << r.type_i
                  << '\t' << r.type_ii << '\t' << r.frames << '\t' << r.seconds << '\t' << ref_text << '\n';
        if (verify && ref && *ref != r.count() && status == kOk) status = kMismatch;
        done.push_back(r);
    }
    if (!out_path.empty() && status != kBudget) zk::export_db(done, out_path);
    return status;
}

int cmd_table2(const Global& g, std::int64_t max_k, std::size_t max_n, const std::string& tier_name, bool verify) {
    const zk::Tier tier = parse_tier_or_throw(tier_name);
    if (max_k < 2 || max_k > zk::kMaxModulus) throw std::invalid_argument("--max-k out of range");
    if (max_n == 0) max_n = tier_max_length(tier);
    if (max_n > tier_max_length(tier))
        throw std::invalid_argument("--max-n " + std::to_string(max_n) + " is outside the " + tier_name + " tier");

    // Columns Z^1..Z^9, E8, E8+Z.
    std::vector<zk::LatticeClass> columns;
    for (std::size_t n = 1; n <= 9; ++n) columns.push_back(zk::LatticeClass::zn(n));
    columns.push_back(zk::LatticeClass::e8());
    columns.push_back(zk::LatticeClass::e8_plus_z());

    std::vector<Job> jobs;
    for (std::int64_t k = 2; k <= max_k; ++k)
        for (const auto& c : columns)
            if (c.n <= max_n) jobs.push_back({k, c});
    const auto outcomes = run_jobs(jobs, g, tier);

    int status = kOk;
    std::cout << "k\tZ1\tZ2\tZ3\tZ4\tZ5\tZ6\tZ7\tZ8\tZ9\tE8\tE8Z\n";
    std::size_t next = 0;
    for (std::int64_t k = 2; k <= max_k; ++k) {
        std::cout << k;
        for (const auto& c : columns) {
            std::cout << '\t';
            if (c.n > max_n) {
                std::cout << '-';
                continue;
            }
            const auto& o = outcomes[next++];
            std::cout << cell(o);
            if (!o.result) {
                status = kBudget;
                continue;
            }
            const auto ref = zk::reference_count(k, c);
            if (verify && ref && *ref != o.result->count()) {
                std::cout << '!';
                if (status == kOk) status = kMismatch;
            }
        }
        std::cout << '\n';
    }

    std::vector<zk::ClassificationResult> results;
    for (const auto& o : outcomes)
        if (o.result) results.push_back(*o.result);
    for (const auto& b : zk::length8_type_balance(results)) {
        std::cout << "# length 8, k=" << b.k << ": type I " << b.type_i << ", type II " << b.type_ii;
        if (!b.as_expected) std::cout << "  ** VIOLATES THE EXPECTED RELATION **";
        std::cout << '\n';
    }
    return status;
}

int cmd_table3(const Global& g, std::int64_t from, std::int64_t to, bool verify) {
    if (from < 2 || to < from || to > zk::kMaxModulus) throw std::invalid_argument("invalid --from/--to range");
    std::vector<Job> jobs;
    for (std::int64_t k = from; k <= to; ++k) jobs.push_back({k, zk::LatticeClass::zn(4)});
    const auto outcomes = run_jobs(jobs, g, zk::Tier::Standard);
    int status = kOk;
    std::cout << "k\tN4\n";
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        std::cout << jobs[i].k << '\t' << cell(outcomes[i]);
        if (!outcomes[i].result) {
            status = kBudget;
        } else if (const auto ref = zk::reference_count(jobs[i].k, jobs[i].lattice);
                   verify && ref && *ref != outcomes[i].result->count()) {
            std::cout << '!';
            if (status == kOk) status = kMismatch;
        }
        std::cout << '\n';
    }
    return status;
}

int cmd_oracle(const Global& g, std::int64_t k, std::size_t n) {
    const zk::BruteForceLimits limits;
    if (k < 2 || k > limits.max_k || n < 1 || n > limits.max_n)
        throw std::invalid_argument("oracle supports k <= " + std::to_string(limits.max_k) +
                                    " and n <= " + std::to_string(limits.max_n));
    const auto brute = zk::brute_force_classify(k, n, limits);
    std::vector<Job> jobs;
    for (const auto& cls : zk::lattice_classes(n)) jobs.push_back({k, cls});
    const auto outcomes = run_jobs(jobs, g, zk::Tier::Standard);
    std::size_t total = 0;
    for (const auto& o : outcomes) {
        if (!o.result) return kBudget;
        total += o.result->count();
    }
    std::cout << "k=" << k << " n=" << n << " brute_force=" << brute.size() << " frames=" << total
              << (brute.size() == total ? " OK" : " MISMATCH") << '\n';
    return brute.size() == total ? kOk : kMismatch;
}

int cmd_check(const std::string& path) {
    const auto results = zk::import_db(path);
    const auto problems = zk::verify_results(results);
    std::size_t records = 0;
    for (const auto& r : results) records += r.count();
    for (const auto& p : problems) std::cout << p << '\n';
    std::cout << path << ": " << records << " records, " << problems.size() << " problems\n";
    return problems.empty() ? kOk : kMismatch;
}

int cmd_export(const Global& g, const std::string& out, const std::string& format_name,
               const std::vector<std::int64_t>& ks, const std::vector<std::size_t>& ns, const std::string& tier_name) {
    const auto format = zk::parse_db_format(format_name);
    if (!format) throw std::invalid_argument("unknown format '" + format_name + "'");
    const zk::Tier tier = parse_tier_or_throw(tier_name);
    std::vector<Job> jobs;
    for (auto k : ks)
        for (auto n : ns)
            for (const auto& cls : zk::lattice_classes(n)) jobs.push_back({k, cls});
    const auto outcomes = run_jobs(jobs, g, tier);
    std::vector<zk::ClassificationResult> results;
    for (const auto& o : outcomes) {
        if (!o.result) return kBudget;
        results.push_back(*o.result);
    }
    zk::export_db(results, out, *format);
    std::cerr << "wrote " << out << '\n';
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Classification of self-dual Z_k-codes via frames of unimodular lattices"};
    app.require_subcommand(1);
    Global g;
    double budget = 0;
    app.add_option("--jobs", g.jobs, "Worker threads")->check(CLI::Range(1u, 1024u));
    auto* budget_opt = app.add_option("--budget-seconds", budget, "Wall-clock budget per (k, n, lattice) job")
                           ->check(CLI::PositiveNumber);

    std::int64_t k = 0;
    std::size_t n = 0;
    std::string lattice, tier = "standard", out_path, format = "zkdb", db_path;
    bool verify = false;

    auto* classify = app.add_subcommand("classify", "Classify codes for one (k, n)");
    classify->add_option("--k", k, "Modulus")->required();
    classify->add_option("--n", n, "Length")->required();
    classify->add_option("--lattice", lattice, "zn, e8 or e8z (default: all classes)");
    classify->add_option("--tier", tier, "standard (n <= 7) or extended");
    classify->add_option("--out", out_path, "Also write the classes as a zkdb file");
    classify->add_flag("--verify", verify, "Exit 1 if a count differs from the known value");

    std::int64_t max_k = 24;
    std::size_t max_n = 0;
    auto* table2 = app.add_subcommand("table2", "Class counts per lattice for k = 2..max-k");
    table2->add_option("--max-k", max_k, "Largest modulus");
    table2->add_option("--max-n", max_n, "Largest length (default: tier maximum)");
    table2->add_option("--tier", tier, "standard (n <= 7) or extended");
    table2->add_flag("--verify", verify, "Mark and fail on counts that differ from the known values");

    std::int64_t from = 25, to = 200;
    auto* table3 = app.add_subcommand("table3", "N_4(k) for k in [from, to]");
    table3->add_option("--from", from, "First modulus");
    table3->add_option("--to", to, "Last modulus");
    table3->add_flag("--verify", verify, "Mark and fail on counts that differ from the known values");

    auto* oracle = app.add_subcommand("oracle", "Compare against brute-force enumeration (k <= 5, n <= 4)");
    oracle->add_option("--k", k, "Modulus")->required();
    oracle->add_option("--n", n, "Length")->required();

    auto* check = app.add_subcommand("check", "Validate a zkdb file");
    check->add_option("dbfile", db_path, "Database file")->required();

    std::vector<std::int64_t> ks;
    std::vector<std::size_t> ns;
    auto* exp = app.add_subcommand("export", "Classify and write a database");
    exp->add_option("--out", out_path, "Destination path")->required();
    exp->add_option("--format", format, "zkdb or json");
    exp->add_option("--k", ks, "Moduli (repeatable)")->required();
    exp->add_option("--n", ns, "Lengths (repeatable)")->required();
    exp->add_option("--tier", tier, "standard (n <= 7) or extended");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInput;
    }
    if (budget_opt->count() > 0) g.budget_seconds = budget;

    try {
        if (*classify) return cmd_classify(g, k, n, lattice, tier, out_path, verify);
        if (*table2) return cmd_table2(g, max_k, max_n, tier, verify);
        if (*table3) return cmd_table3(g, from, to, verify);
        if (*oracle) return cmd_oracle(g, k, n);
        if (*check) return cmd_check(db_path);
        if (*exp) return cmd_export(g, out_path, format, ks, ns, tier);
    } catch (const zk::BudgetExceeded& e) {
        std::cerr << "budget exhausted: " << e.what() << '\n';
        return kBudget;
    } catch (const zk::FormatError& e) {
        std::cerr << "malformed database: " << e.what() << '\n';
        return kInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return kInput;
    } catch (const std::logic_error& e) {
        std::cerr << "internal consistency failure: " << e.what() << '\n';
        return kMismatch;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInput;
    }
    return kOk;
}
