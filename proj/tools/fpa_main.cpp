// fpa: function point analysis from count-sheet files.
//
// Exit statuses: 0 success, 1 validation failure (well-formed file,
// invalid content), 2 parse failure, 3 I/O failure. Reports go to
// stdout, diagnostics to stderr.

#include <CLI11.hpp>

#include <charconv>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "fpa/engine.hpp"
#include "fpa/report.hpp"

namespace {

std::optional<std::int64_t> parse_signed_int(std::string_view token) {
    if (!token.empty() && token.front() == '+')
        token.remove_prefix(1);
    if (token.empty())
        return std::nullopt;
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size())
        return std::nullopt;
    return value;
}

enum ExitStatus : int {
    kOk = 0,
    kValidationFailure = 1,
    kParseFailure = 2,
    kIoFailure = 3,
};

std::optional<std::string> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        return std::nullopt;
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad())
        return std::nullopt;
    return std::move(buffer).str();
}

void print_diagnostics(const std::string& path, const std::vector<fpa::ParseDiagnostic>& diags) {
    for (const fpa::ParseDiagnostic& d : diags)
        std::cerr << path << ":" << d.line << ": "
                  << (d.severity == fpa::Severity::Error ? "error" : "warning") << ": "
                  << d.message << "\n";
}

int status_for(const std::vector<fpa::ParseDiagnostic>& diags) {
    if (fpa::has_syntax_errors(diags))
        return kParseFailure;
    if (fpa::has_semantic_errors(diags))
        return kValidationFailure;
    return kOk;
}

struct Loaded {
    std::optional<fpa::SheetDocument> document;
    int status = kOk;
};

Loaded load_document(const std::string& path) {
    const auto text = read_file(path);
    if (!text) {
        std::cerr << "error: cannot read file '" << path << "'\n";
        return {std::nullopt, kIoFailure};
    }
    auto result = fpa::parse_sheet(*text);
    print_diagnostics(path, result.diagnostics);
    if (!result.document)
        return {std::nullopt, status_for(result.diagnostics)};
    return {std::move(result.document), kOk};
}

struct Overrides {
    fpa::WeightMatrix weights = fpa::default_weights();
    fpa::ClassificationMatrix matrix = fpa::default_classification_matrix();
    int status = kOk;
};

Overrides load_overrides(const std::string& weights_path, const std::string& matrix_path) {
    Overrides overrides;
    if (!weights_path.empty()) {
        const auto text = read_file(weights_path);
        if (!text) {
            std::cerr << "error: cannot read file '" << weights_path << "'\n";
            overrides.status = kIoFailure;
            return overrides;
        }
        auto result = fpa::parse_weights_file(*text);
        print_diagnostics(weights_path, result.diagnostics);
        if (!result.weights) {
            overrides.status = status_for(result.diagnostics);
            return overrides;
        }
        overrides.weights = *result.weights;
    }
    if (!matrix_path.empty()) {
        const auto text = read_file(matrix_path);
        if (!text) {
            std::cerr << "error: cannot read file '" << matrix_path << "'\n";
            overrides.status = kIoFailure;
            return overrides;
        }
        auto result = fpa::parse_matrix_file(*text);
        print_diagnostics(matrix_path, result.diagnostics);
        if (!result.matrix) {
            overrides.status = status_for(result.diagnostics);
            return overrides;
        }
        overrides.matrix = *result.matrix;
    }
    return overrides;
}

int cmd_compute(const std::string& path, const std::string& weights_path,
                const std::string& matrix_path, fpa::ReportFormat fmt) {
    auto loaded = load_document(path);
    if (!loaded.document)
        return loaded.status;
    const auto overrides = load_overrides(weights_path, matrix_path);
    if (overrides.status != kOk)
        return overrides.status;
    try {
        const auto result =
            fpa::evaluate_document(*loaded.document, overrides.weights, overrides.matrix);
        std::cout << fpa::render_result(result, fmt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kValidationFailure;
    }
    return kOk;
}

int cmd_validate(const std::string& path) {
    const auto loaded = load_document(path);
    if (!loaded.document)
        return loaded.status;
    std::cout << "OK\n";
    return kOk;
}

int cmd_compare(const std::string& left_path, const std::string& right_path,
                const std::string& weights_path, const std::string& matrix_path,
                fpa::ReportFormat fmt) {
    auto left = load_document(left_path);
    if (!left.document)
        return left.status;
    auto right = load_document(right_path);
    if (!right.document)
        return right.status;
    const auto overrides = load_overrides(weights_path, matrix_path);
    if (overrides.status != kOk)
        return overrides.status;
    try {
        const auto left_result =
            fpa::evaluate_document(*left.document, overrides.weights, overrides.matrix);
        const auto right_result =
            fpa::evaluate_document(*right.document, overrides.weights, overrides.matrix);
        std::cout << fpa::render_comparison(fpa::compare(left_result, right_result), fmt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kValidationFailure;
    }
    return kOk;
}

// f<j>=<+/-k> or total=<+/-k>
int apply_rcaf_adjustment(fpa::SheetDocument& doc, const std::string& flag) {
    const auto eq = flag.find('=');
    const auto fail_syntax = [&] {
        std::cerr << "error: malformed --rcaf adjustment '" << flag
                  << "' (expected f<j>=<+/-k> or total=<+/-k>)\n";
        return kParseFailure;
    };
    if (eq == std::string::npos)
        return fail_syntax();
    const std::string key = flag.substr(0, eq);
    const auto delta = parse_signed_int(flag.substr(eq + 1));
    if (!delta)
        return fail_syntax();
    if (key == "total") {
        if (!doc.rcaf.declared_total) {
            std::cerr << "error: --rcaf " << flag
                      << " requires a declared-total rcaf sheet (this sheet is itemized)\n";
            return kValidationFailure;
        }
        const std::int64_t next = *doc.rcaf.declared_total + *delta;
        if (next < 0 || next > fpa::kRcafTotalMax) {
            std::cerr << "error: --rcaf " << flag << " pushes the total out of range 0..70 ("
                      << "would be " << next << ")\n";
            return kValidationFailure;
        }
        doc.rcaf.declared_total = static_cast<int>(next);
        return kOk;
    }
    if (key.size() >= 2 && key.front() == 'f') {
        const auto id = parse_signed_int(key.substr(1));
        if (id && *id >= 1 && *id <= fpa::kRcafFactorCount) {
            if (!doc.rcaf.factors) {
                std::cerr << "error: --rcaf " << flag
                          << " requires itemized rcaf factors (this sheet declares a total)\n";
                return kValidationFailure;
            }
            auto& rating = (*doc.rcaf.factors)[static_cast<std::size_t>(*id - 1)];
            const std::int64_t next = rating + *delta;
            if (next < 0 || next > fpa::kRcafRatingMax) {
                std::cerr << "error: --rcaf " << flag << " pushes f" << *id
                          << " out of range 0..5 (would be " << next << ")\n";
                return kValidationFailure;
            }
            rating = static_cast<int>(next);
            return kOk;
        }
    }
    return fail_syntax();
}

// <CLASS>:<level>, adds one counted item
int apply_add_adjustment(fpa::SheetDocument& doc, const std::string& flag, int& synthetic_count) {
    const auto colon = flag.find(':');
    const auto fail_syntax = [&] {
        std::cerr << "error: malformed --add adjustment '" << flag
                  << "' (expected <CLASS>:<level>, e.g. ILF:high)\n";
        return kParseFailure;
    };
    if (colon == std::string::npos)
        return fail_syntax();
    const auto cls = fpa::class_from_code(flag.substr(0, colon));
    const auto lvl = fpa::level_from_code(flag.substr(colon + 1));
    if (!cls || !lvl)
        return fail_syntax();
    if (doc.counts) {
        ++doc.counts->cell(*cls, *lvl);
        return kOk;
    }
    std::set<std::string> names;
    for (const fpa::ItemRecord& item : *doc.items)
        names.insert(item.name);
    std::string name;
    do {
        name = "whatif add " + std::to_string(++synthetic_count);
    } while (names.count(name) != 0);
    fpa::ItemRecord item;
    item.name = name;
    item.cls = *cls;
    item.declared = *lvl;
    doc.items->push_back(std::move(item));
    return kOk;
}

int cmd_whatif(const std::string& path, const std::vector<std::string>& rcaf_flags,
               const std::vector<std::string>& add_flags, const std::string& weights_path,
               const std::string& matrix_path, fpa::ReportFormat fmt) {
    auto loaded = load_document(path);
    if (!loaded.document)
        return loaded.status;
    const auto overrides = load_overrides(weights_path, matrix_path);
    if (overrides.status != kOk)
        return overrides.status;

    fpa::SheetDocument adjusted = *loaded.document;
    for (const std::string& flag : rcaf_flags)
        if (const int status = apply_rcaf_adjustment(adjusted, flag); status != kOk)
            return status;
    int synthetic_count = 0;
    for (const std::string& flag : add_flags)
        if (const int status = apply_add_adjustment(adjusted, flag, synthetic_count);
            status != kOk)
            return status;

    try {
        // Both sides recomputed from scratch; no sensitivity shortcut.
        auto base = fpa::evaluate_document(*loaded.document, overrides.weights, overrides.matrix);
        auto after = fpa::evaluate_document(adjusted, overrides.weights, overrides.matrix);
        base.name = "base";
        after.name = "adjusted";
        std::cout << fpa::render_comparison(fpa::compare(base, after), fmt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kValidationFailure;
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Function point analysis: size estimates from count-sheet files"};
    app.require_subcommand(1);

    std::string path, right_path;
    std::string weights_path, matrix_path;
    std::string format_name = "table";
    std::vector<std::string> rcaf_flags, add_flags;

    const auto add_shared = [&](CLI::App* cmd) {
        cmd->add_option("--weights", weights_path, "Weight matrix override file");
        cmd->add_option("--matrix", matrix_path, "Classification matrix override file");
        cmd->add_option("--format", format_name, "Output format")
            ->check(CLI::IsMember({"table", "csv", "json"}))
            ->capture_default_str();
    };

    auto* compute = app.add_subcommand("compute", "Evaluate a count sheet and print the report");
    compute->add_option("path", path, "Count sheet file (.fpa)")->required();
    add_shared(compute);

    auto* validate = app.add_subcommand("validate", "Check a count sheet and report diagnostics");
    validate->add_option("path", path, "Count sheet file (.fpa)")->required();

    auto* compare = app.add_subcommand("compare", "Compare the estimates of two count sheets");
    compare->add_option("left", path, "Left count sheet")->required();
    compare->add_option("right", right_path, "Right count sheet")->required();
    add_shared(compare);

    auto* whatif = app.add_subcommand("whatif", "Recompute an estimate after adjustments");
    whatif->add_option("path", path, "Count sheet file (.fpa)")->required();
    whatif->add_option("--rcaf", rcaf_flags, "Adjust rcaf: f<j>=<+/-k> or total=<+/-k>");
    whatif->add_option("--add", add_flags, "Add one counted item: <CLASS>:<level>");
    add_shared(whatif);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kParseFailure;
    }

    const fpa::ReportFormat fmt = *fpa::format_from_name(format_name);
    if (app.got_subcommand(compute))
        return cmd_compute(path, weights_path, matrix_path, fmt);
    if (app.got_subcommand(validate))
        return cmd_validate(path);
    if (app.got_subcommand(compare))
        return cmd_compare(path, right_path, weights_path, matrix_path, fmt);
    return cmd_whatif(path, rcaf_flags, add_flags, weights_path, matrix_path, fmt);
}
