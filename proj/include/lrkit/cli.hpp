#pragma once

// Command-line front end. `run` is the whole program; tools/lrkit.cpp only
// forwards argv and the standard streams.
//
// Exit codes: 0 success, 1 invalid instance or certificate, 2 usage error.

#include <cctype>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "core.hpp"
#include "count.hpp"
#include "reduce.hpp"
#include "rsk.hpp"
#include "verify.hpp"

namespace lrkit::cli {

using json = nlohmann::ordered_json;

/// Malformed input text: bad number token, ragged rows, unreadable file.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class InstanceKind { Kostka, Lr, Tables };

/// Named operands of a counting instance, kept as the parsed decimal vectors.
struct InstanceSpec {
    InstanceKind kind = InstanceKind::Kostka;
    std::vector<std::pair<std::string, std::vector<Nat>>> operands;

    [[nodiscard]] json to_json() const {
        json j = json::object();
        for (const auto& [name, xs] : operands) {
            json arr = json::array();
            for (const auto& x : xs) arr.push_back(x.str());
            j[name] = arr;
        }
        return j;
    }
};

inline Nat parse_nat(const std::string& token) {
    if (token.empty() || !std::all_of(token.begin(), token.end(), [](unsigned char c) { return std::isdigit(c); }))
        throw UsageError("malformed number: '" + token + "'");
    return Nat(token);
}

/// "7,3" -> {7, 3}; "" -> {}.
inline std::vector<Nat> parse_list(const std::string& text) {
    std::vector<Nat> out;
    if (text.empty()) return out;
    std::string token;
    std::istringstream ss(text);
    while (std::getline(ss, token, ',')) out.push_back(parse_nat(token));
    if (text.back() == ',') throw UsageError("malformed list: '" + text + "'");
    return out;
}

inline Partition parse_partition(const std::string& text) {
    auto parts = parse_list(text);
    try {
        return Partition(std::move(parts));
    } catch (const DomainError& e) {
        throw DomainError(std::string(e.what()) + " (in '" + text + "')");
    }
}

inline Composition parse_composition(const std::string& text) { return Composition(parse_list(text)); }

/// Whitespace-separated decimal rows; blank lines and '#' comments skipped.
inline std::vector<std::vector<Nat>> parse_rows(std::istream& in) {
    std::vector<std::vector<Nat>> rows;
    std::string line;
    while (std::getline(in, line)) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ls(line);
        std::vector<Nat> row;
        std::string tok;
        while (ls >> tok) row.push_back(parse_nat(tok));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline RowContentMatrix parse_certificate(std::istream& in, std::size_t values_if_empty) {
    const auto rows = parse_rows(in);
    const std::size_t values = rows.empty() ? values_if_empty : rows.front().size();
    return RowContentMatrix::from_rows(rows, values);
}

inline ContingencyTable parse_table(std::istream& in) {
    const auto rows = parse_rows(in);
    for (const auto& r : rows)
        if (r.size() != rows.front().size()) throw UsageError("table rows have different lengths");
    return ContingencyTable::from_rows(rows);
}

inline std::string format_rows(const std::vector<std::vector<Nat>>& rows) {
    std::string out;
    for (const auto& r : rows) {
        out += join(r, " ");
        out += '\n';
    }
    return out;
}

inline json rows_json(const std::vector<std::vector<Nat>>& rows) {
    json arr = json::array();
    for (const auto& r : rows) {
        json jr = json::array();
        for (const auto& x : r) jr.push_back(x.str());
        arr.push_back(jr);
    }
    return arr;
}

inline std::vector<std::vector<Nat>> tableau_rows(const Tableau& t) {
    std::vector<std::vector<Nat>> rows;
    for (const auto& r : t.rows) rows.emplace_back(r.begin(), r.end());
    return rows;
}

/// Pair text format:
///   table=<rows>x<cols>
///   shape=<parts>
///   insertion:
///   <rows>
///   recording:
///   <rows>
inline std::string format_pair(const TableauPair& p) {
    std::string out = "table=" + std::to_string(p.table_rows) + "x" + std::to_string(p.table_cols) + "\n";
    out += "shape=" + join(p.shape.parts()) + "\n";
    out += "insertion:\n" + format_rows(tableau_rows(p.insertion));
    out += "recording:\n" + format_rows(tableau_rows(p.recording));
    return out;
}

inline TableauPair parse_pair(std::istream& in) {
    TableauPair p;
    std::optional<std::pair<std::size_t, std::size_t>> dims;
    Tableau* current = nullptr;
    std::string line;
    while (std::getline(in, line)) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        line = line.substr(first);
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line == "insertion:") {
            current = &p.insertion;
        } else if (line == "recording:") {
            current = &p.recording;
        } else if (line.rfind("table=", 0) == 0) {
            const auto spec = line.substr(6);
            const auto x = spec.find('x');
            if (x == std::string::npos) throw UsageError("malformed table dimensions: '" + spec + "'");
            dims.emplace(to_size(parse_nat(spec.substr(0, x))), to_size(parse_nat(spec.substr(x + 1))));
        } else if (line.rfind("shape=", 0) == 0) {
            continue;  // recomputed from the tableaux
        } else {
            if (!current) throw UsageError("tableau row before 'insertion:' or 'recording:' header");
            std::istringstream ls(line);
            std::vector<Tableau::Entry> row;
            std::string tok;
            while (ls >> tok) {
                const auto v = to_size(parse_nat(tok));
                if (v == 0) throw DomainError("tableau entries must be positive");
                row.push_back(v);
            }
            current->rows.push_back(std::move(row));
        }
    }
    p.shape = p.insertion.shape();
    if (dims) {
        p.table_rows = dims->first;
        p.table_cols = dims->second;
    } else {
        p.table_rows = p.recording.max_entry();
        p.table_cols = p.insertion.max_entry();
    }
    return p;
}

inline json report_json(const Report& r) {
    json j;
    j["valid"] = r.ok();
    if (!r.ok()) {
        j["constraint"] = to_string(r.failed);
        j["row"] = std::to_string(r.row + 1);
        j["index"] = std::to_string(r.index + 1);
        j["message"] = r.describe();
    }
    return j;
}

inline std::string report_text(const Report& r) { return r.ok() ? "valid" : "invalid: " + r.describe(); }

/// Runs one invocation. argv[0] is the program name.
inline int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact Kostka numbers, Littlewood-Richardson coefficients and contingency-table counts"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

    std::string shape, alpha, content, row_sums, col_sums, input = "-";
    std::size_t limit = 1000;
    bool oracle = false;

    std::function<void()> action;
    std::string command;
    InstanceSpec instance;
    json result;
    std::string text;

    // Operand helpers register options on a leaf command.
    auto opt_shape = [&](CLI::App* c) { c->add_option("--shape", shape, "Partition λ, comma-separated")->required(); };
    auto opt_alpha = [&](CLI::App* c) { c->add_option("--alpha", alpha, "Partition α, comma-separated")->required(); };
    auto opt_content = [&](CLI::App* c) {
        c->add_option("--content", content, "Content μ or ν, comma-separated")->required();
    };
    auto opt_margins = [&](CLI::App* c) {
        c->add_option("--row-sums", row_sums, "Row margins a, comma-separated")->required();
        c->add_option("--col-sums", col_sums, "Column margins b, comma-separated")->required();
    };
    auto opt_input = [&](CLI::App* c) { c->add_option("--input", input, "Input file ('-' for stdin)"); };

    auto read_input = [&](auto&& parse) {
        if (input == "-") return parse(in);
        std::ifstream f(input);
        if (!f) throw UsageError("cannot open input file '" + input + "'");
        return parse(f);
    };

    auto kostka_spec = [&] {
        instance = {InstanceKind::Kostka, {{"shape", parse_list(shape)}, {"content", parse_list(content)}}};
        return std::pair{parse_partition(shape), parse_composition(content)};
    };
    auto lr_spec = [&] {
        instance = {InstanceKind::Lr,
                    {{"shape", parse_list(shape)}, {"alpha", parse_list(alpha)}, {"content", parse_list(content)}}};
        return std::tuple{parse_partition(shape), parse_partition(alpha), parse_composition(content)};
    };
    auto tables_spec = [&] {
        instance = {InstanceKind::Tables, {{"row_sums", parse_list(row_sums)}, {"col_sums", parse_list(col_sums)}}};
        return std::pair{parse_composition(row_sums), parse_composition(col_sums)};
    };

    auto set_count = [&](const Nat& n) {
        result = n.str();
        text = n.str() + "\n";
    };
    auto set_certificate = [&](const RowContentMatrix& m) {
        result = rows_json(m.to_rows());
        text = format_rows(m.to_rows());
    };
    auto set_table = [&](const ContingencyTable& t) {
        result = rows_json(t.to_rows());
        text = format_rows(t.to_rows());
    };
    auto set_report = [&](const Report& r) {
        result = report_json(r);
        text = report_text(r) + "\n";
    };
    auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help, auto&& body) {
        auto* c = parent->add_subcommand(name, help);
        c->callback([&, c, name, body] {
            command = c->get_parent()->get_name() + " " + name;
            action = body;
        });
        return c;
    };

    // count
    auto* count = app.add_subcommand("count", "Exact counts")->require_subcommand(1);
    {
        auto* c = leaf(count, "kostka", "Kostka number K(shape, content)", [&] {
            auto [lam, mu] = kostka_spec();
            set_count(count_kostka(lam, mu, oracle ? Method::Enumeration : Method::DynamicProgramming));
        });
        opt_shape(c), opt_content(c);
        c->add_flag("--oracle", oracle, "Count by brute-force enumeration");
        c = leaf(count, "lr", "Littlewood-Richardson coefficient c^content_{shape,alpha}", [&] {
            auto [lam, al, nu] = lr_spec();
            set_count(count_lr(lam, al, nu, oracle ? Method::Enumeration : Method::DynamicProgramming));
        });
        opt_shape(c), opt_alpha(c), opt_content(c);
        c->add_flag("--oracle", oracle, "Count by brute-force enumeration");
        c = leaf(count, "tables", "Contingency tables with the given margins", [&] {
            auto [a, b] = tables_spec();
            if (oracle) {
                Nat n = 0;
                for_each_table(a, b, [&](const ContingencyTable&) { return ++n, true; });
                set_count(n);
            } else {
                set_count(count_tables(a, b));
            }
        });
        opt_margins(c);
        c->add_flag("--oracle", oracle, "Count by brute-force enumeration");
    }

    // enumerate
    auto* enumerate = app.add_subcommand("enumerate", "List certificates or tables")->require_subcommand(1);
    {
        auto emit_all = [&](const auto& e, auto&& rows_of) {
            json items = json::array();
            text.clear();
            for (std::size_t i = 0; i < e.items.size(); ++i) {
                const auto rows = rows_of(e.items[i]);
                items.push_back(rows_json(rows));
                text += "# " + std::to_string(i + 1) + "\n" + format_rows(rows);
            }
            text += "# total=" + std::to_string(e.items.size()) + " truncated=" + (e.truncated ? "true" : "false") +
                    "\n";
            result = json::object();
            result["items"] = items;
            result["truncated"] = e.truncated;
        };
        auto cert_rows = [](const RowContentMatrix& m) { return m.to_rows(); };
        auto* c = leaf(enumerate, "kostka", "Tableaux of the given shape and content", [&, emit_all, cert_rows] {
            auto [lam, mu] = kostka_spec();
            emit_all(enumerate_tableaux(lam, mu, limit), cert_rows);
        });
        opt_shape(c), opt_content(c);
        c->add_option("--limit", limit, "Maximum number of items");
        c = leaf(enumerate, "lr", "LR skew tableaux on shape*alpha", [&, emit_all, cert_rows] {
            auto [lam, al, nu] = lr_spec();
            emit_all(enumerate_lr(lam, al, nu, limit), cert_rows);
        });
        opt_shape(c), opt_alpha(c), opt_content(c);
        c->add_option("--limit", limit, "Maximum number of items");
        c = leaf(enumerate, "tables", "Contingency tables with the given margins", [&, emit_all] {
            auto [a, b] = tables_spec();
            emit_all(enumerate_tables(a, b, limit), [](const ContingencyTable& t) { return t.to_rows(); });
        });
        opt_margins(c);
        c->add_option("--limit", limit, "Maximum number of items");
    }

    // check
    auto* check = app.add_subcommand("check", "Decision procedures")->require_subcommand(1);
    {
        auto* c = leaf(check, "positive", "Whether K(shape, content) > 0, by dominance", [&] {
            auto [lam, mu] = kostka_spec();
            const bool pos = kostka_positive(lam, mu);
            result = pos;
            text = pos ? "true\n" : "false\n";
        });
        opt_shape(c), opt_content(c);
    }

    // verify
    auto* verify = app.add_subcommand("verify", "Check a certificate read from --input")->require_subcommand(1);
    {
        auto* c = leaf(verify, "tableau", "Certificate of a tableau of shape and content", [&] {
            auto [lam, mu] = kostka_spec();
            const auto m = read_input([&](std::istream& s) { return parse_certificate(s, mu.size()); });
            set_report(validate_tableau(lam, mu, m));
        });
        opt_shape(c), opt_content(c), opt_input(c);
        c = leaf(verify, "skew", "Certificate of a skew tableau on shape*alpha", [&] {
            auto [lam, al, nu] = lr_spec();
            const auto m = read_input([&](std::istream& s) { return parse_certificate(s, nu.size()); });
            set_report(validate_skew_tableau(skew_concat(lam, al), nu, m));
        });
        opt_shape(c), opt_alpha(c), opt_content(c), opt_input(c);
        c = leaf(verify, "lr", "Certificate of an LR skew tableau on shape*alpha", [&] {
            auto [lam, al, nu] = lr_spec();
            const auto m = read_input([&](std::istream& s) { return parse_certificate(s, nu.size()); });
            const auto sh = skew_concat(lam, al);
            auto rep = validate_skew_tableau(sh, nu, m);
            if (rep) rep = validate_lr(sh, nu, m);
            set_report(rep);
        });
        opt_shape(c), opt_alpha(c), opt_content(c), opt_input(c);
    }

    // map
    auto* map = app.add_subcommand("map", "Witness bijections")->require_subcommand(1);
    {
        auto* c = leaf(map, "rsk", "Table -> tableau pair", [&] {
            const auto t = read_input(parse_table);
            const auto p = rsk_forward(t);
            result = json::object();
            result["table"] = {std::to_string(p.table_rows), std::to_string(p.table_cols)};
            json sh = json::array();
            for (const auto& x : p.shape) sh.push_back(x.str());
            result["shape"] = sh;
            result["insertion"] = rows_json(tableau_rows(p.insertion));
            result["recording"] = rows_json(tableau_rows(p.recording));
            text = format_pair(p);
        });
        opt_input(c);
        c = leaf(map, "rsk-inverse", "Tableau pair -> table", [&] { set_table(rsk_inverse(read_input(parse_pair))); });
        opt_input(c);
        c = leaf(map, "lemma1", "2-row table -> tableau certificate", [&] {
            set_certificate(lemma1_forward(read_input(parse_table)));
        });
        opt_input(c);
        c = leaf(map, "lemma1-inverse", "Tableau certificate -> 2-row table", [&] {
            auto [a, b] = tables_spec();
            const auto m = read_input([&](std::istream& s) { return parse_certificate(s, b.size() + 1); });
            set_table(lemma1_inverse(m, a, b));
        });
        opt_margins(c), opt_input(c);
        c = leaf(map, "lemma2", "Tableau certificate -> LR skew certificate", [&] {
            auto [lam, mu] = kostka_spec();
            const auto m = read_input([&](std::istream& s) { return parse_certificate(s, mu.size()); });
            set_certificate(lemma2_forward(lam, mu, m));
        });
        opt_shape(c), opt_content(c), opt_input(c);
        c = leaf(map, "lemma2-inverse", "LR skew certificate -> tableau certificate", [&] {
            auto [lam, mu] = kostka_spec();
            const auto m = read_input([&](std::istream& s) { return parse_certificate(s, mu.size()); });
            set_certificate(lemma2_inverse(lam, mu, m));
        });
        opt_shape(c), opt_content(c), opt_input(c);
    }

    // reduce
    auto* reduce = app.add_subcommand("reduce", "Instance maps")->require_subcommand(1);
    {
        auto* c = leaf(reduce, "tables-to-kostka", "(a, b) -> (shape, content)", [&] {
            auto [a, b] = tables_spec();
            const auto k = lemma1_instance(a, b);
            result = json::object();
            result["shape"] = rows_json({std::vector<Nat>(k.shape.begin(), k.shape.end())})[0];
            result["content"] = rows_json({std::vector<Nat>(k.content.begin(), k.content.end())})[0];
            text = "shape=" + join(k.shape.parts()) + " content=" + join(k.content.entries()) + "\n";
        });
        opt_margins(c);
        c = leaf(reduce, "kostka-to-lr", "(shape, content) -> (alpha, nu)", [&] {
            auto [lam, mu] = kostka_spec();
            const auto l = lemma2_instance(lam, mu);
            result = json::object();
            result["alpha"] = rows_json({std::vector<Nat>(l.alpha.begin(), l.alpha.end())})[0];
            result["nu"] = rows_json({std::vector<Nat>(l.content.begin(), l.content.end())})[0];
            text = "alpha=" + join(l.alpha.parts()) + " nu=" + join(l.content.entries()) + "\n";
        });
        opt_shape(c), opt_content(c);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        std::ostringstream o, er;
        const int code = app.exit(e, o, er);
        out << o.str();
        err << er.str();
        return code == 0 ? 0 : 2;
    }

    try {
        action();
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const InvariantViolation& e) {
        err << "internal invariant violated: " << e.what() << "\n";
        return 1;
    }

    if (format == "json") {
        json doc;
        doc["command"] = command;
        doc["instance"] = instance.to_json();
        doc["result"] = result;
        out << doc.dump() << "\n";
    } else {
        out << text;
    }
    return 0;
}

}  // namespace lrkit::cli
