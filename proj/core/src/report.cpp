#include "swdual/report.hpp"

#include "swdual/errors.hpp"
#include "swdual/version.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <thread>

namespace swdual {

using ordered_json = nlohmann::ordered_json;

std::string command_str(Command c) {
    switch (c) {
        case Command::Check: return "check";
        case Command::Scan: return "scan";
        case Command::Tl: return "tl";
        case Command::Dims: return "dims";
        case Command::Formulas: return "formulas";
    }
    throw InternalError("unhandled command");
}

std::string format_str(OutFormat f) {
    switch (f) {
        case OutFormat::Json: return "json";
        case OutFormat::Csv: return "csv";
        case OutFormat::Text: return "text";
    }
    throw InternalError("unhandled output format");
}

namespace {

std::string method_str(PhiMethod m) {
    switch (m) {
        case PhiMethod::Closure: return "closure";
        case PhiMethod::Enumerate: return "enumerate";
        case PhiMethod::Both: return "both";
    }
    throw InternalError("unhandled phi method");
}

// Accepts "3", "2..5", and comma-separated mixtures of both.
std::vector<int> parse_int_list(const std::string& text, const char* what) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ',')) {
        if (token.empty()) throw UsageError(std::string("empty entry in ") + what + " list");
        const auto dots = token.find("..");
        try {
            if (dots == std::string::npos) {
                std::size_t used = 0;
                const int v = std::stoi(token, &used);
                if (used != token.size()) throw std::invalid_argument(token);
                out.push_back(v);
            } else {
                std::size_t used = 0;
                const std::string lo_s = token.substr(0, dots);
                const std::string hi_s = token.substr(dots + 2);
                const int lo = std::stoi(lo_s, &used);
                if (used != lo_s.size()) throw std::invalid_argument(token);
                const int hi = std::stoi(hi_s, &used);
                if (used != hi_s.size()) throw std::invalid_argument(token);
                if (lo > hi)
                    throw UsageError(std::string(what) + " range is empty: " + token);
                for (int v = lo; v <= hi; ++v) out.push_back(v);
            }
        } catch (const std::invalid_argument&) {
            throw UsageError(std::string("cannot parse ") + what + " entry: " + token);
        } catch (const std::out_of_range&) {
            throw UsageError(std::string(what) + " entry out of range: " + token);
        }
    }
    if (out.empty()) throw UsageError(std::string(what) + " list is empty");
    for (int v : out)
        if (v < 1) throw UsageError(std::string(what) + " values must be at least 1");
    return out;
}

std::vector<Field> parse_field_list(const std::string& text) {
    std::vector<Field> out;
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ',')) {
        if (token.empty()) throw UsageError("empty entry in field list");
        out.push_back(parse_field(token));
    }
    if (out.empty()) throw UsageError("field list is empty");
    return out;
}

std::vector<GroupKind> parse_groups(const std::string& text) {
    if (text == "GL") return {GroupKind::GL};
    if (text == "SL") return {GroupKind::SL};
    if (text == "both") return {GroupKind::GL, GroupKind::SL};
    throw UsageError("unknown group: " + text + " (expected GL, SL, or both)");
}

PhiMethod parse_method(const std::string& text) {
    if (text == "closure") return PhiMethod::Closure;
    if (text == "enumerate") return PhiMethod::Enumerate;
    if (text == "both") return PhiMethod::Both;
    throw UsageError("unknown method: " + text + " (expected closure, enumerate, or both)");
}

// ---------------------------------------------------------------------------
// grid execution
// ---------------------------------------------------------------------------

struct CellTask {
    int n = 0;
    int r = 0;
    Field field;
    GroupKind group = GroupKind::GL;
};

std::vector<std::string> whole_cell_verdict_names(const RunConfig& cfg) {
    switch (cfg.command) {
        case Command::Check:
        case Command::Scan:
            if (cfg.claim == "main1") return {"injective", "iso"};
            if (cfg.method == PhiMethod::Both)
                return {"phi_methods_agree", "phi_surjective", "rho_surjective"};
            return {"phi_surjective", "rho_surjective"};
        case Command::Dims: return {"cell"};
        case Command::Formulas: return {"formula_a", "formula_b", "vandermonde"};
        case Command::Tl: return {"cell"};
    }
    throw InternalError("unhandled command");
}

DualityReport skipped_cell(const RunConfig& cfg, const CellTask& t, const std::string& reason) {
    DualityReport rep;
    rep.command = cfg.command == Command::Scan ? cfg.claim
                 : cfg.command == Command::Check ? cfg.claim
                                                 : command_str(cfg.command);
    rep.n = t.n;
    rep.r = t.r;
    rep.field = field_str(t.field);
    rep.field_q = t.field.cardinality;
    rep.group = cfg.command == Command::Formulas ? "" : group_kind_str(t.group);
    for (const auto& name : whole_cell_verdict_names(cfg))
        rep.verdicts[name] = Verdict::skipped(reason);
    return rep;
}

DualityReport run_cell(const RunConfig& cfg, const CellTask& t) {
    try {
        switch (cfg.command) {
            case Command::Check:
            case Command::Scan:
                if (cfg.claim == "main1") return check_main1_cell(t.n, t.r, t.field, cfg.caps);
                return check_thrall_cell(t.n, t.r, t.field, t.group, cfg.caps, cfg.method);
            case Command::Dims:
                return check_dims_cell(t.n, t.r, t.field, t.group, cfg.caps, cfg.method);
            case Command::Formulas:
                return check_formulas_cell(t.n, t.r, t.field, cfg.caps);
            default:
                throw InternalError("cell dispatch reached a non-grid command");
        }
    } catch (const ResourceLimitError& e) {
        return skipped_cell(cfg, t, e.what());
    } catch (const UnsupportedError& e) {
        return skipped_cell(cfg, t, e.what());
    }
}

// parse_args collapses the group list to {GL} for main1 and formulas, so the
// grid loop is uniform.
std::vector<CellTask> make_tasks(const RunConfig& cfg) {
    std::vector<CellTask> tasks;
    for (int n : cfg.ns)
        for (int r : cfg.rs)
            for (const Field& f : cfg.fields)
                for (GroupKind g : cfg.groups) tasks.push_back({n, r, f, g});
    return tasks;
}

std::vector<DualityReport> run_grid(const RunConfig& cfg) {
    const std::vector<CellTask> tasks = make_tasks(cfg);
    std::vector<DualityReport> cells(tasks.size());
    std::vector<std::exception_ptr> errors(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            try {
                cells[i] = run_cell(cfg, tasks[i]);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const std::size_t jobs =
        std::min<std::size_t>(static_cast<std::size_t>(std::max(cfg.jobs, 1)), tasks.size());
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(jobs);
        for (std::size_t i = 0; i < jobs; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    return cells;
}

std::string cell_label(const DualityReport& c) {
    std::string s = c.command + " n=" + std::to_string(c.n) + " r=" + std::to_string(c.r) +
                    " field=" + c.field;
    if (!c.group.empty()) s += " group=" + c.group;
    return s;
}

// ---------------------------------------------------------------------------
// emission
// ---------------------------------------------------------------------------

ordered_json config_echo(const RunConfig& cfg) {
    ordered_json e;
    e["command"] = command_str(cfg.command);
    if (cfg.command == Command::Check || cfg.command == Command::Scan) e["claim"] = cfg.claim;
    if (cfg.command == Command::Tl) {
        e["p"] = cfg.p;
        e["rmax"] = cfg.rmax;
        e["with_q"] = cfg.with_q;
    } else {
        e["n"] = cfg.ns;
        e["r"] = cfg.rs;
        ordered_json fields = ordered_json::array();
        for (const Field& f : cfg.fields) fields.push_back(field_str(f));
        e["fields"] = std::move(fields);
        const bool claims_group =
            cfg.command == Command::Dims ||
            ((cfg.command == Command::Check || cfg.command == Command::Scan) &&
             cfg.claim == "thrall");
        if (claims_group) {
            ordered_json groups = ordered_json::array();
            for (GroupKind g : cfg.groups) groups.push_back(group_kind_str(g));
            e["groups"] = std::move(groups);
            e["method"] = method_str(cfg.method);
        }
    }
    e["format"] = format_str(cfg.format);
    e["timings"] = cfg.timings;
    ordered_json caps;
    caps["max_tensor_dim"] = cfg.caps.max_tensor_dim;
    caps["max_group_order"] = cfg.caps.max_group_order;
    caps["max_factorial"] = cfg.caps.max_factorial;
    caps["max_elim_dim"] = cfg.caps.max_elim_dim;
    caps["max_field_enum"] = cfg.caps.max_field_enum;
    e["caps"] = std::move(caps);
    return e;
}

ordered_json verdict_json(const Verdict& v) {
    ordered_json j;
    if (v.is_skipped()) {
        j["value"] = nullptr;
        j["reason"] = v.reason;
    } else {
        j["value"] = v.is_true();
    }
    return j;
}

std::string emit_json(const std::vector<DualityReport>& cells, const RunConfig& cfg) {
    ordered_json root;
    root["schema_version"] = kSchemaVersion;
    root["tool_version"] = kToolVersion;
    root["config_echo"] = config_echo(cfg);
    ordered_json arr = ordered_json::array();
    for (const DualityReport& c : cells) {
        ordered_json jc;
        jc["command"] = c.command;
        jc["n"] = c.n;
        jc["r"] = c.r;
        jc["field"] = c.field;
        jc["field_q"] = c.field_q;
        jc["group"] = c.group;
        ordered_json dims;
        for (const auto& [name, value] : c.dims) dims[name] = value;
        jc["dims"] = std::move(dims);
        ordered_json verdicts;
        for (const auto& [name, v] : c.verdicts) verdicts[name] = verdict_json(v);
        jc["verdicts"] = std::move(verdicts);
        if (!c.witnesses.empty()) {
            ordered_json ws;
            for (const auto& [name, matrix] : c.witnesses) ws[name] = matrix;
            jc["witnesses"] = std::move(ws);
        }
        if (cfg.timings && !c.timings_ms.empty()) {
            ordered_json ts;
            for (const auto& [name, ms] : c.timings_ms) ts[name] = ms;
            jc["timings_ms"] = std::move(ts);
        }
        arr.push_back(std::move(jc));
    }
    root["cells"] = std::move(arr);
    return root.dump(2) + "\n";
}

struct Grid {
    std::vector<std::string> dim_cols;
    std::vector<std::string> verdict_cols;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

std::string verdict_short(const Verdict& v) {
    if (v.is_skipped()) return "skipped";
    return v.is_true() ? "true" : "false";
}

Grid make_grid(const std::vector<DualityReport>& cells) {
    Grid g;
    std::set<std::string> dims, verdicts;
    for (const auto& c : cells) {
        for (const auto& [name, _] : c.dims) dims.insert(name);
        for (const auto& [name, _] : c.verdicts) verdicts.insert(name);
    }
    g.dim_cols.assign(dims.begin(), dims.end());
    g.verdict_cols.assign(verdicts.begin(), verdicts.end());
    g.header = {"command", "n", "r", "field", "field_q", "group"};
    g.header.insert(g.header.end(), g.dim_cols.begin(), g.dim_cols.end());
    g.header.insert(g.header.end(), g.verdict_cols.begin(), g.verdict_cols.end());
    for (const auto& c : cells) {
        std::vector<std::string> row = {c.command,
                                        std::to_string(c.n),
                                        std::to_string(c.r),
                                        c.field,
                                        std::to_string(c.field_q),
                                        c.group};
        for (const auto& name : g.dim_cols) {
            auto it = c.dims.find(name);
            row.push_back(it == c.dims.end() ? "" : std::to_string(it->second));
        }
        for (const auto& name : g.verdict_cols) {
            auto it = c.verdicts.find(name);
            row.push_back(it == c.verdicts.end() ? "" : verdict_short(it->second));
        }
        g.rows.push_back(std::move(row));
    }
    return g;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += "\"\"";
        else out += ch;
    }
    out += "\"";
    return out;
}

std::string emit_csv(const std::vector<DualityReport>& cells) {
    const Grid g = make_grid(cells);
    std::string out;
    for (std::size_t i = 0; i < g.header.size(); ++i) {
        if (i) out += ",";
        out += csv_escape(g.header[i]);
    }
    out += "\n";
    for (const auto& row : g.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ",";
            out += csv_escape(row[i]);
        }
        out += "\n";
    }
    return out;
}

std::string emit_text(const std::vector<DualityReport>& cells) {
    const Grid g = make_grid(cells);
    std::vector<std::size_t> width(g.header.size());
    for (std::size_t i = 0; i < g.header.size(); ++i) width[i] = g.header[i].size();
    for (const auto& row : g.rows)
        for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
    auto emit_row = [&](const std::vector<std::string>& row, std::string& out) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += "  ";
            out += row[i];
            if (i + 1 < row.size()) out.append(width[i] - row[i].size(), ' ');
        }
        out += "\n";
    };
    std::string out;
    emit_row(g.header, out);
    for (const auto& row : g.rows) emit_row(row, out);
    for (const auto& c : cells) {
        for (const auto& [name, v] : c.verdicts)
            if (v.is_skipped())
                out += "note: " + cell_label(c) + ": " + name + " skipped: " + v.reason + "\n";
        for (const auto& [name, _] : c.witnesses)
            out += "note: " + cell_label(c) + ": witness " + name +
                   " recorded (JSON output carries the matrix)\n";
    }
    return out;
}

} // namespace

// ---------------------------------------------------------------------------
// expectations
// ---------------------------------------------------------------------------

std::vector<Expectation> expectations_for(const DualityReport& cell) {
    std::vector<Expectation> out;
    const bool q_gt_r = cell.field_q == 0 || cell.field_q > cell.r;
    if (cell.command == "main1") {
        if (cell.n >= cell.r)
            out.push_back({"injective", true, "n >= r forces an injective symmetric-group map"});
        if (cell.n >= cell.r + 1)
            out.push_back({"iso", true, "n >= r+1 forces an isomorphism onto the commutant"});
    } else if (cell.command == "thrall") {
        if (q_gt_r) {
            out.push_back(
                {"phi_surjective", true, "q > r forces the group algebra onto the commutant"});
            out.push_back({"rho_surjective", true,
                           "q > r forces the symmetric-group algebra onto the commutant"});
        }
    } else if (cell.command == "formulas") {
        out.push_back({"formula_a", true, "polynomial identity in the one-parameter operator"});
        out.push_back({"formula_b", true, "polynomial identity in the diagonal operator"});
        out.push_back({"vandermonde", true, "interpolation must recover the divided powers"});
    } else if (cell.command == "tl") {
        if (cell.field_q == 0)
            out.push_back({"rho_eq_catalan", true,
                           "characteristic-zero image has Catalan dimension"});
    }
    if (cell.verdicts.count("phi_methods_agree"))
        out.push_back({"phi_methods_agree", true,
                       "closure and enumeration must produce the same span"});
    return out;
}

// ---------------------------------------------------------------------------
// public entry points
// ---------------------------------------------------------------------------

std::optional<RunConfig> parse_args(int argc, const char* const* argv) {
    RunConfig cfg;
    cfg.caps = caps_from_env();

    CLI::App app{"exact two-sided checks of commuting symmetric-group and matrix-group "
                 "actions on tensor powers"};
    app.set_version_flag("--version", std::string(kToolVersion));
    app.require_subcommand(1);

    std::string n_text, r_text, q_text;
    std::string group_text = "GL";
    std::string method_text = "closure";
    std::string format_text = "json";
    bool no_q = false;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", format_text, "output format: json | csv | text")
            ->check(CLI::IsMember({"json", "csv", "text"}));
        sub->add_option("--out", cfg.out, "output path ('-' writes to stdout)");
        sub->add_option("--jobs", cfg.jobs, "worker threads for independent cells")
            ->check(CLI::PositiveNumber);
        sub->add_flag("--timings", cfg.timings,
                      "include wall-clock timings (JSON only; breaks byte-reproducibility)");
        sub->add_option("--max-tensor-dim", cfg.caps.max_tensor_dim, "cap on n^r")
            ->check(CLI::PositiveNumber);
        sub->add_option("--max-group-order", cfg.caps.max_group_order,
                        "cap on group order for enumeration")
            ->check(CLI::PositiveNumber);
        sub->add_option("--max-factorial", cfg.caps.max_factorial, "cap on r!")
            ->check(CLI::PositiveNumber);
        sub->add_option("--max-elim-dim", cfg.caps.max_elim_dim,
                        "cap on the ambient dimension of eliminations")
            ->check(CLI::PositiveNumber);
        sub->add_option("--max-field-enum", cfg.caps.max_field_enum,
                        "cap on field-element enumeration")
            ->check(CLI::PositiveNumber);
    };
    auto add_grid = [&](CLI::App* sub, bool with_group) {
        sub->add_option("--n", n_text, "n value, range a..b, or comma list")->required();
        sub->add_option("--r", r_text, "r value, range a..b, or comma list")->required();
        sub->add_option("--q", q_text,
                        "comma-separated fields: a prime p, a prime power q=p^e, or Q")
            ->required();
        if (with_group) {
            sub->add_option("--group", group_text, "GL | SL | both (ignored for main1)")
                ->check(CLI::IsMember({"GL", "SL", "both"}));
            sub->add_option("--method", method_text,
                            "group-algebra span method: closure | enumerate | both")
                ->check(CLI::IsMember({"closure", "enumerate", "both"}));
        }
        add_common(sub);
    };

    std::string claim;
    CLI::App* check = app.add_subcommand("check", "evaluate one claim at a single instance");
    check->add_option("claim", claim, "main1 | thrall")
        ->required()
        ->check(CLI::IsMember({"main1", "thrall"}));
    add_grid(check, true);

    CLI::App* scan = app.add_subcommand("scan", "evaluate one claim over a parameter grid");
    scan->add_option("claim", claim, "main1 | thrall")
        ->required()
        ->check(CLI::IsMember({"main1", "thrall"}));
    add_grid(scan, true);

    CLI::App* dims = app.add_subcommand("dims", "report all computed dimensions over a grid");
    add_grid(dims, true);

    CLI::App* formulas =
        app.add_subcommand("formulas", "verify the one-parameter operator identities");
    add_grid(formulas, false);

    CLI::App* tl = app.add_subcommand("tl", "scan the n = 2 image against Catalan dimensions");
    tl->add_option("--p", cfg.p, "prime characteristic of the scan field")->required();
    tl->add_option("--rmax", cfg.rmax, "largest tensor exponent (scan runs r = 2..rmax)")
        ->check(CLI::PositiveNumber);
    tl->add_flag("--no-q", no_q, "skip the characteristic-zero companion cells");
    add_common(tl);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        std::cout << app.help();
        return std::nullopt;
    } catch (const CLI::CallForAllHelp&) {
        std::cout << app.help("", CLI::AppFormatMode::All);
        return std::nullopt;
    } catch (const CLI::CallForVersion&) {
        std::cout << kToolVersion << "\n";
        return std::nullopt;
    } catch (const CLI::ParseError& e) {
        throw UsageError(std::string(e.what()) + " (run with --help for usage)");
    }

    if (check->parsed()) cfg.command = Command::Check;
    else if (scan->parsed()) cfg.command = Command::Scan;
    else if (dims->parsed()) cfg.command = Command::Dims;
    else if (formulas->parsed()) cfg.command = Command::Formulas;
    else cfg.command = Command::Tl;
    cfg.claim = claim;

    if (format_text == "csv") cfg.format = OutFormat::Csv;
    else if (format_text == "text") cfg.format = OutFormat::Text;
    else cfg.format = OutFormat::Json;

    if (cfg.command == Command::Tl) {
        cfg.with_q = !no_q;
        if (cfg.rmax < 2) throw UsageError("--rmax must be at least 2");
        (void)make_field(cfg.p, 1); // validates primality
        return cfg;
    }

    cfg.ns = parse_int_list(n_text, "--n");
    cfg.rs = parse_int_list(r_text, "--r");
    cfg.fields = parse_field_list(q_text);
    cfg.groups = parse_groups(group_text);
    cfg.method = parse_method(method_text);

    if (cfg.command == Command::Check) {
        if (cfg.ns.size() != 1 || cfg.rs.size() != 1 || cfg.fields.size() != 1 ||
            cfg.groups.size() != 1)
            throw UsageError("check evaluates a single instance; use scan for grids");
    }
    if (cfg.command == Command::Formulas) {
        for (const Field& f : cfg.fields)
            if (!f.is_finite())
                throw UsageError("formulas quantifies over all field elements; "
                                 "all fields must be finite");
        cfg.groups = {GroupKind::GL};
    }
    if (cfg.claim == "main1") cfg.groups = {GroupKind::GL};
    return cfg;
}

RunResult run(const RunConfig& cfg) {
    RunResult res;
    if (cfg.command == Command::Tl) {
        // Sequential on purpose: truncation stops the scan at the first row
        // that exceeds a cap, which is an ordered notion.
        res.cells = tl_scan(cfg.p, cfg.rmax, cfg.with_q, cfg.caps);
    } else {
        res.cells = run_grid(cfg);
    }
    for (const DualityReport& cell : res.cells) {
        for (const Expectation& ex : expectations_for(cell)) {
            auto it = cell.verdicts.find(ex.verdict);
            if (it == cell.verdicts.end() || it->second.is_skipped()) continue;
            if (it->second.is_true() != ex.expected)
                res.mismatches.push_back(cell_label(cell) + ": expected " + ex.verdict + "=" +
                                         (ex.expected ? "true" : "false") + " (" + ex.reason +
                                         ") but observed " + it->second.str());
        }
    }
    res.exit_code = res.mismatches.empty() ? 0 : 1;
    return res;
}

std::string emit_report(const std::vector<DualityReport>& cells, const RunConfig& cfg) {
    switch (cfg.format) {
        case OutFormat::Json: return emit_json(cells, cfg);
        case OutFormat::Csv: return emit_csv(cells);
        case OutFormat::Text: return emit_text(cells);
    }
    throw InternalError("unhandled output format");
}

void write_output(const std::string& bytes, const std::string& out_path) {
    if (out_path == "-") {
        std::cout << bytes;
        std::cout.flush();
        if (!std::cout) throw IoError("cannot write report to stdout");
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw IoError("cannot open output file: " + out_path);
    f.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    f.flush();
    if (!f) throw IoError("cannot write output file: " + out_path);
}

} // namespace swdual
