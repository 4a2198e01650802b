#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "mt/catalog.hpp"
#include "mt/enumerate.hpp"
#include "mt/recognizers.hpp"
#include "mt/serialize.hpp"
#include "mt/verify.hpp"

namespace fs = std::filesystem;
using namespace mt;

namespace {

enum Exit { kMember = 0, kNonMember = 1, kInputError = 2, kUndecided = 3 };

constexpr int kCliOracleCap = 20;

struct Config {
    int oracle_cap = kCliOracleCap;
    long long node_budget = 2'000'000;
    int workers = 0;
};

std::string slurp(const std::string& path) {
    if (path.empty() || path == "-") {
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path, 0);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// One graph per input. graph6 takes the first non-empty line and refuses a second one.
Graph read_graph(const std::string& path, const std::string& format) {
    std::string text = slurp(path);
    if (format == "edges") return parse_edge_list(text);
    std::istringstream lines(text);
    std::string line, found;
    while (std::getline(lines, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty()) continue;
        if (!found.empty()) throw ParseError("more than one graph in input", 0);
        found = line;
    }
    if (found.empty()) throw ParseError("empty input", 0);
    return parse_graph6(found);
}

std::string join(const VertexSet& s) {
    std::string out;
    for (int v : s.members()) out += (out.empty() ? "" : " ") + std::to_string(v);
    return out;
}

void print_text(const RecognitionResult& r, GraphClass cls) {
    std::cout << class_name(cls) << ": " << verdict_name(r.verdict);
    if (!r.route.empty()) std::cout << " (" << r.route << ")";
    std::cout << '\n';
    std::visit(
        [](const auto& c) {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, MTPartition> || std::is_same_v<T, TC12Partition>)
                std::cout << "A: " << join(c.A) << "\nB: " << join(c.B) << '\n';
            if constexpr (std::is_same_v<T, MTFourPartition>)
                std::cout << "K: " << join(c.K) << "\nMbar: " << join(c.Mbar) << "\nS: " << join(c.S)
                          << "\nM: " << join(c.M) << '\n';
            if constexpr (std::is_same_v<T, SplitPartition>)
                std::cout << "K: " << join(c.K) << "\nS: " << join(c.S) << '\n';
            if constexpr (std::is_same_v<T, NoCertificate>) {
                std::cout << (c.kind == NoKind::PromiseViolation ? "promise witness " : "witness ")
                          << c.catalog << '/' << c.obstruction_id << ':';
                for (int v : c.witness) std::cout << ' ' << v;
                std::cout << '\n';
            }
        },
        r.certificate);
    if (r.partition_omitted) std::cout << "partition omitted\n";
    if (!r.note.empty()) std::cout << r.note << '\n';
}

int cmd_recognize(const Config& cfg, const std::string& mode_s, const std::string& format, bool as_json,
                  const std::string& path) {
    Mode mode = *parse_mode(mode_s);
    Graph g = read_graph(path, format);
    RecognizeOptions opt;
    opt.oracle_cap = cfg.oracle_cap;
    opt.node_budget = cfg.node_budget;
    RecognitionResult r;
    try {
        r = recognize(g, mode, opt);
    } catch (const PreconditionError& e) {
        r = {};
        r.verdict = Verdict::Undecided;
        if (e.witness()) r.certificate = *e.witness();
        r.route = std::string(mode_name(mode));
        r.note = e.what();
    }
    GraphClass cls = target_class(mode);
    if (as_json) std::cout << to_json(r, cls) << '\n';
    else print_text(r, cls);
    if (r.verdict == Verdict::Yes) return kMember;
    if (r.verdict == Verdict::No) return kNonMember;
    return kUndecided;
}

int cmd_verify(const Config& cfg, const std::string& graph_path, const std::string& cert_path,
               const std::string& format) {
    Graph g = read_graph(graph_path, format);
    ParsedResult p;
    try {
        p = result_from_json(slurp(cert_path), g.order());
    } catch (const SchemaError& e) {
        std::cerr << e.what() << '\n';
        return kInputError;
    }
    Check c = verify_result(g, p.result, p.cls, cfg.oracle_cap);
    if (c) {
        std::cout << "ok\n";
        return 0;
    }
    std::cout << "rejected: " << c.describe() << '\n';
    return 1;
}

void write_lines(const fs::path& file, const ObstructionCatalog& cat) {
    std::ofstream out(file);
    for (const auto& e : cat.entries()) out << e.form << '\n';
}

int cmd_enumerate(const Config& cfg, const std::string& cls_s, int max_n, const std::string& restrict_s,
                  bool extended, const std::string& out_dir) {
    if (max_n > kEnumerateMaxOrder) {
        std::cerr << "--max-n is capped at " << kEnumerateMaxOrder << '\n';
        return kInputError;
    }
    if (max_n >= 9 && !extended) {
        std::cerr << "--max-n " << max_n << " needs --extended\n";
        return kInputError;
    }
    GraphClass cls = cls_s == "tc12" ? GraphClass::TC12 : cls_s == "split" ? GraphClass::Split : GraphClass::MT;
    bool disconnected = restrict_s == "disconnected";
    if (disconnected && cls != GraphClass::MT) {
        std::cerr << "--restrict disconnected is only available for --class mt\n";
        return kInputError;
    }
    Filter filter = disconnected ? Filter::None : *parse_filter(restrict_s);

    fs::path dir;
    std::ofstream progress;
    if (!out_dir.empty()) {
        dir = out_dir;
        fs::create_directories(dir);
        progress.open(dir / "progress.tsv");
        progress << "order\tclasses\n" << std::flush;
    }
    EnumerateOptions opt;
    opt.workers = cfg.workers;
    opt.on_level = [&](int order, std::size_t classes) {
        std::cerr << "order " << order << ": " << classes << " graphs\n";
        if (progress) progress << order << '\t' << classes << '\n' << std::flush;
    };

    ObstructionSearch s = disconnected ? disconnected_minimal_obstructions(max_n, opt)
                                       : find_minimal_obstructions(max_n, cls, filter, opt);
    std::string stem = s.catalog.name();
    std::size_t total = 0;
    std::ostringstream tsv;
    tsv << "order\tcount\n";
    for (int k = 0; k <= max_n; ++k) {
        std::size_t c = k < int(s.per_order.size()) ? s.per_order[k] : 0;
        tsv << k << '\t' << c << '\n';
        total += c;
    }
    if (!out_dir.empty()) {
        write_lines(dir / (stem + ".g6"), s.catalog);
        std::ofstream(dir / (stem + ".counts.tsv")) << tsv.str();
        std::cerr << "wrote " << (dir / (stem + ".g6")).string() << '\n';
    } else {
        for (const auto& e : s.catalog.entries()) std::cout << e.form << '\n';
    }
    std::cerr << tsv.str() << "total\t" << total << '\n';
    return 0;
}

int cmd_catalog(const std::string& name) {
    const ObstructionCatalog* c = catalog_by_name(name);
    if (!c) {
        std::cerr << "unknown catalog " << name << "; known:";
        for (auto n : catalog_names()) std::cerr << ' ' << n;
        std::cerr << '\n';
        return kInputError;
    }
    std::vector<std::string> forms;
    for (const auto& e : c->entries()) forms.push_back(e.form);
    std::sort(forms.begin(), forms.end());
    for (const auto& f : forms) std::cout << f << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Recognition, certificate checking and obstruction search for MT graphs"};
    app.require_subcommand(1);
    Config cfg;
    app.add_option("--oracle-cap", cfg.oracle_cap, "Largest order handed to the brute-force oracle")
        ->envname("MT_ORACLE_CAP")
        ->check(CLI::Range(0, 40));
    app.add_option("--budget", cfg.node_budget, "Node budget of the partition search")->check(CLI::PositiveNumber);
    app.add_option("--workers", cfg.workers, "Enumeration threads (0: all cores)")
        ->envname("MT_WORKERS")
        ->check(CLI::NonNegativeNumber);

    std::vector<std::string> modes;
    for (Mode m : {Mode::Auto, Mode::Oracle, Mode::Tree, Mode::Forest, Mode::C4Free, Mode::Cograph, Mode::Nd,
                   Mode::Split, Mode::TC12})
        modes.emplace_back(mode_name(m));

    std::string mode = "auto", format = "g6", graph_path, cert_path;
    bool as_json = false;
    auto* rec = app.add_subcommand("recognize", "Decide membership and print a certificate");
    rec->add_option("--mode", mode, "Recognition route")->check(CLI::IsMember(modes));
    rec->add_option("--format", format, "Input format")->check(CLI::IsMember({"g6", "edges"}));
    rec->add_flag("--json", as_json, "Print the result as JSON");
    rec->add_option("graph", graph_path, "Graph file (stdin when absent or -)");

    auto* ver = app.add_subcommand("verify", "Check a JSON certificate against a graph");
    ver->add_option("graph", graph_path, "Graph file")->required();
    ver->add_option("certificate", cert_path, "Certificate JSON (stdin when -)")->required();
    ver->add_option("--format", format, "Graph format")->check(CLI::IsMember({"g6", "edges"}));

    std::string cls = "mt", restrict_s = "none", out_dir;
    int max_n = 8;
    bool extended = false;
    auto* en = app.add_subcommand("enumerate", "Find all minimal obstructions up to an order");
    en->add_option("--class", cls, "Target class")->check(CLI::IsMember({"mt", "tc12", "split"}));
    en->add_option("--max-n", max_n, "Largest order")->check(CLI::Range(1, kEnumerateMaxOrder + 10));
    en->add_option("--restrict", restrict_s, "Hereditary restriction")
        ->check(CLI::IsMember({"none", "chordal", "forest", "cograph", "C4-free", "disconnected"}));
    en->add_flag("--extended", extended, "Allow orders 9 and 10");
    en->add_option("--out", out_dir, "Directory for <catalog>.g6, counts TSV and progress.tsv");

    std::string cat_name;
    auto* cat = app.add_subcommand("catalog", "Print a built-in catalog as graph6, sorted");
    cat->add_option("name", cat_name, "Catalog name")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kInputError;
    }

    try {
        if (*rec) return cmd_recognize(cfg, mode, format, as_json, graph_path);
        if (*ver) return cmd_verify(cfg, graph_path, cert_path, format);
        if (*en) return cmd_enumerate(cfg, cls, max_n, restrict_s, extended, out_dir);
        if (*cat) return cmd_catalog(cat_name);
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kInputError;
    } catch (const SizeError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kInputError;
    }
    return kInputError;
}
