#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "cograph/errors.hpp"
#include "cograph/generator.hpp"
#include "cograph/graph.hpp"

namespace cograph::cli {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t nanos(Clock::duration d) {
    return std::chrono::duration_cast<std::chrono::nanoseconds>(d).count();
}

void write_output(const CographHandle& h, Format format, std::ostream& out, std::string& line) {
    line.clear();
    switch (format) {
    case Format::Cotree:
        line += bit(h.root_type) == 0 ? "0:" : "1:";
        serialize_to(h.tree.get(), h.tree.get().root(), line);
        line += '\n';
        break;
    case Format::Graph6:
        line = to_graph6(materialize(h));
        line += '\n';
        break;
    case Format::Edgelist:
        line = to_edgelist(materialize(h));
        break;
    case Format::Dot:
        line = to_dot(materialize(h), "G" + std::to_string(h.ordinal));
        break;
    }
    out << line;
    out.flush();
}

struct BenchResult {
    std::uint64_t outputs = 0;
    std::uint64_t trees = 0;
    double counting_seconds = 0;
    double counting_mean_delay_ns = 0;
    std::int64_t counting_max_delay_ns = 0;
    std::int64_t time_to_first_ns = 0;
    std::uint64_t start_work = 0;
    std::uint64_t max_step_work = 0;
    double mean_step_work = 0;
    double serialized_seconds = 0;
    double serialized_mean_delay_ns = 0;
    std::int64_t serialized_max_delay_ns = 0;
    std::uint64_t serialized_bytes = 0;
};

BenchResult bench_one(std::uint32_t n) {
    BenchResult r;

    // Counting mode: one step per tree, two outputs per tree.
    WorkCounter work;
    const auto t0 = Clock::now();
    CographGenerator gen(n, &work);
    const auto first = Clock::now();
    r.time_to_first_ns = nanos(first - t0);
    r.start_work = work.total();
    r.trees = 1;
    auto prev = first;
    std::uint64_t before = work.total();
    std::uint64_t step_work_sum = 0;
    while (gen.advance_tree()) {
        const auto now = Clock::now();
        r.counting_max_delay_ns = std::max(r.counting_max_delay_ns, nanos(now - prev));
        prev = now;
        const std::uint64_t step = work.total() - before;
        before = work.total();
        r.max_step_work = std::max(r.max_step_work, step);
        step_work_sum += step;
        ++r.trees;
    }
    const auto t1 = Clock::now();
    r.outputs = n == 1 ? 1 : 2 * r.trees;
    r.counting_seconds = std::chrono::duration<double>(t1 - t0).count();
    r.counting_mean_delay_ns = static_cast<double>(nanos(t1 - t0)) / static_cast<double>(r.outputs);
    if (r.trees > 1) {
        r.mean_step_work = static_cast<double>(step_work_sum) / static_cast<double>(r.trees - 1);
    }

    // Serialization-inclusive: every output rendered as a cotree line.
    std::string line;
    std::size_t sink = 0;
    const auto s0 = Clock::now();
    CographGenerator ser(n);
    auto last = s0;
    while (auto h = ser.next()) {
        line.clear();
        line += bit(h->root_type) == 0 ? "0:" : "1:";
        serialize_to(h->tree.get(), h->tree.get().root(), line);
        sink += line.size();
        const auto now = Clock::now();
        r.serialized_max_delay_ns = std::max(r.serialized_max_delay_ns, nanos(now - last));
        last = now;
    }
    const auto s1 = Clock::now();
    r.serialized_seconds = std::chrono::duration<double>(s1 - s0).count();
    r.serialized_mean_delay_ns = static_cast<double>(nanos(s1 - s0)) / static_cast<double>(r.outputs);
    r.serialized_bytes = sink;
    return r;
}

void report(std::uint32_t n, const BenchResult& r, std::ostream& out) {
    out << "n=" << n << '\n'
        << "total_outputs=" << r.outputs << '\n'
        << "total_trees=" << r.trees << '\n'
        << "total_seconds=" << r.counting_seconds << '\n'
        << "mean_delay_ns=" << r.counting_mean_delay_ns << '\n'
        << "max_delay_ns=" << r.counting_max_delay_ns << '\n'
        << "time_to_first_ns=" << r.time_to_first_ns << '\n'
        << "start_work=" << r.start_work << '\n'
        << "max_step_work=" << r.max_step_work << '\n'
        << "mean_step_work=" << r.mean_step_work << '\n'
        << "max_step_work_per_n=" << static_cast<double>(r.max_step_work) / n << '\n'
        << "serialized_total_seconds=" << r.serialized_seconds << '\n'
        << "serialized_mean_delay_ns=" << r.serialized_mean_delay_ns << '\n'
        << "serialized_max_delay_ns=" << r.serialized_max_delay_ns << '\n'
        << "serialized_bytes=" << r.serialized_bytes << '\n';
}

} // namespace

int cmd_generate(const RunConfig& cfg, std::ostream& out) {
    if (cfg.trees_only && cfg.format != Format::Cotree) {
        throw UsageError("--trees-only requires --format cotree");
    }
    if (cfg.trees_only && cfg.connected_only) {
        throw UsageError("--trees-only and --connected-only are mutually exclusive");
    }
    CographGenerator gen(cfg.n);
    std::uint64_t written = 0;
    std::string line;
    while (auto h = gen.next()) {
        if (cfg.limit && written >= *cfg.limit) break;
        if (cfg.trees_only) {
            if (h->root_type == RootType::Join) continue;
            line = serialize(h->tree.get());
            line += '\n';
            out << line;
            out.flush();
        } else {
            if (cfg.connected_only && h->root_type != RootType::Join && cfg.n > 1) continue;
            write_output(*h, cfg.format, out, line);
        }
        if (!out) return kExitFailure;
        ++written;
    }
    return out ? kExitOk : kExitFailure;
}

int cmd_count(const RunConfig& cfg, std::ostream& out) {
    out << count_cographs(cfg.n, cfg.threads) << '\n';
    return out ? kExitOk : kExitFailure;
}

int cmd_bench(const RunConfig& cfg, std::ostream& out) {
    if (cfg.n < 2) throw UsageError("bench requires n >= 2");
    const std::uint32_t last = cfg.max_n.value_or(cfg.n);
    if (last < cfg.n) throw UsageError("--max-n must not be below -n");

    double fitted = 0;
    double fitted_work = 0;
    for (std::uint32_t n = cfg.n; n <= last; ++n) {
        const BenchResult r = bench_one(n);
        report(n, r, out);
        fitted = std::max(fitted, static_cast<double>(r.counting_max_delay_ns) / n);
        fitted_work = std::max(fitted_work, static_cast<double>(r.max_step_work) / n);
        if (n != last) out << '\n';
    }
    if (last != cfg.n) {
        out << '\n'
            << "fitted_max_delay_ns_per_n=" << fitted << '\n'
            << "fitted_max_step_work_per_n=" << fitted_work << '\n';
    }
    return out ? kExitOk : kExitFailure;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Enumerate unlabeled cographs through canonical cotrees", "cographgen"};
    app.require_subcommand(1);

    RunConfig cfg;
    const std::map<std::string, Format> formats{{"cotree", Format::Cotree},
                                                {"graph6", Format::Graph6},
                                                {"edgelist", Format::Edgelist},
                                                {"dot", Format::Dot}};

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("-n", cfg.n, "Number of vertices")->required()->check(CLI::PositiveNumber);
        sub->add_option("-o,--output", cfg.output, "Write to this file instead of stdout");
    };

    auto* generate = app.add_subcommand("generate", "Stream every cograph on n vertices");
    add_common(generate);
    std::string format_name = "cotree";
    generate->add_option("--format", format_name, "Output format: cotree, graph6, edgelist or dot")
        ->transform(CLI::IsMember(formats, CLI::ignore_case).description(""))
        ->option_text("FORMAT (default cotree)");
    generate->add_option("--limit", cfg.limit, "Stop after this many outputs")->check(CLI::PositiveNumber);
    generate->add_flag("--connected-only", cfg.connected_only, "Emit only join-rooted (connected) cographs");
    generate->add_flag("--trees-only", cfg.trees_only, "Emit one line per tree, without root types");

    auto* count = app.add_subcommand("count", "Print the number of cographs on n vertices");
    add_common(count);
    count->add_option("--threads", cfg.threads, "Worker threads")->check(CLI::PositiveNumber);

    auto* verify = app.add_subcommand("verify", "Check the generator against brute-force oracles");
    add_common(verify);
    verify->add_flag("--long-oracle", cfg.long_oracle, "Allow the slow n = 7 brute-force count");

    auto* bench = app.add_subcommand("bench", "Measure delay in counting mode");
    add_common(bench);
    bench->add_option("--max-n", cfg.max_n, "Sweep n up to this value");

    try {
        app.parse(argc, argv);
        cfg.format = formats.at(format_name);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
    }

    if (app.got_subcommand(generate)) cfg.command = Command::Generate;
    if (app.got_subcommand(count)) cfg.command = Command::Count;
    if (app.got_subcommand(verify)) cfg.command = Command::Verify;
    if (app.got_subcommand(bench)) cfg.command = Command::Bench;

    try {
        std::ofstream file;
        std::ostream* sink = &out;
        if (!cfg.output.empty()) {
            file.open(cfg.output);
            if (!file) {
                err << "cannot open " << cfg.output << " for writing\n";
                return kExitFailure;
            }
            sink = &file;
        }
        switch (cfg.command) {
        case Command::Generate: return cmd_generate(cfg, *sink);
        case Command::Count: return cmd_count(cfg, *sink);
        case Command::Verify: return cmd_verify(cfg, *sink);
        case Command::Bench: return cmd_bench(cfg, *sink);
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitFailure;
}

} // namespace cograph::cli
