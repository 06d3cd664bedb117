#pragma once

// Command-line front end for lattice_succ. Kept header-only so the tests can
// drive `run_cli` in-process and inspect its output.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lattice_succ/lattice_succ.hpp"

namespace lattice_succ::cli {

enum class Format { Text, JsonLines, Tsv };

inline constexpr const char* kBudgetEnv = "LATTICE_SUCC_BIT_BUDGET";

struct RunConfig {
    std::uint64_t p1 = 2;
    std::uint64_t p2 = 3;
    std::uint64_t bit_budget = kDefaultBitBudget;
    Format format = Format::Text;
};

/// Raised for invalid input that parses but cannot be served (exit 2).
class UsageError : public Error {
public:
    using Error::Error;
};

/// Writes records as text, TSV (header row first) or JSON lines. Every
/// record must carry the same fields, in the same order.
class RecordWriter {
public:
    RecordWriter(std::ostream& out, Format format) : out_(out), format_(format) {}

    using Field = std::pair<std::string, nlohmann::json>;

    void write(const std::vector<Field>& fields, const std::string& text_line)
    {
        switch (format_) {
        case Format::Text:
            out_ << text_line << '\n';
            break;
        case Format::Tsv:
            if (!header_done_) {
                for (std::size_t n = 0; n < fields.size(); ++n) out_ << (n ? "\t" : "") << fields[n].first;
                out_ << '\n';
                header_done_ = true;
            }
            for (std::size_t n = 0; n < fields.size(); ++n) {
                const auto& v = fields[n].second;
                out_ << (n ? "\t" : "") << (v.is_string() ? v.get<std::string>() : v.dump());
            }
            out_ << '\n';
            break;
        case Format::JsonLines: {
            nlohmann::ordered_json obj;
            for (const auto& [k, v] : fields) obj[k] = v;
            out_ << obj.dump() << '\n';
            break;
        }
        }
    }

private:
    std::ostream& out_;
    Format format_;
    bool header_done_ = false;
};

namespace detail {

inline std::string point_text(const GridPoint& p)
{
    std::ostringstream os;
    os << p;
    return os.str();
}

inline std::string family_name(RectFamily f) { return to_string(f); }

/// Parses "WxH".
inline std::pair<Exponent, Exponent> parse_window(const std::string& text)
{
    const auto x = text.find_first_of("xX");
    if (x == std::string::npos) throw UsageError("window must look like WxH, got '" + text + "'");
    try {
        const Exponent w = std::stoll(text.substr(0, x));
        const Exponent h = std::stoll(text.substr(x + 1));
        if (w < 1 || h < 1) throw UsageError("window sides must be positive");
        return {w, h};
    } catch (const std::logic_error&) {
        throw UsageError("window must look like WxH, got '" + text + "'");
    }
}

inline const char* kLevelColors[] = {"#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f",
                                     "#edc948", "#b07aa1", "#ff9da7", "#9c755f", "#bab0ac"};

/// Two panels: source tiling on the left, translated tiling on the right.
/// x grows rightward, y upward. Colour follows level, hatching follows family.
inline void write_svg(std::ostream& os, const std::vector<Rectangle>& source,
                      const std::vector<Rectangle>& translated, Exponent width, Exponent height)
{
    const double cell = std::max(4.0, std::min(24.0, 480.0 / static_cast<double>(std::max(width, height))));
    const double panel_w = cell * static_cast<double>(width);
    const double panel_h = cell * static_cast<double>(height);
    const double gap = 40.0;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << 2 * panel_w + 3 * gap
       << "\" height=\"" << panel_h + 2 * gap << "\">\n"
       << "<defs>\n"
       << "  <pattern id=\"hatch-src\" width=\"6\" height=\"6\" patternUnits=\"userSpaceOnUse\">"
          "<path d=\"M0,6 L6,0\" stroke=\"#000\" stroke-opacity=\"0.35\" stroke-width=\"1\"/></pattern>\n"
       << "  <pattern id=\"hatch-tilde\" width=\"6\" height=\"6\" patternUnits=\"userSpaceOnUse\">"
          "<path d=\"M0,0 L6,6\" stroke=\"#000\" stroke-opacity=\"0.35\" stroke-width=\"1\"/></pattern>\n"
       << "  <clipPath id=\"window\"><rect x=\"0\" y=\"0\" width=\"" << panel_w << "\" height=\"" << panel_h
       << "\"/></clipPath>\n"
       << "</defs>\n";
    auto panel = [&](const std::vector<Rectangle>& rects, double offset_x, const char* title,
                     const char* hatch) {
        os << "<g transform=\"translate(" << offset_x << ',' << gap << ")\">\n"
           << "  <text x=\"0\" y=\"-10\" font-family=\"sans-serif\" font-size=\"14\">" << title << "</text>\n"
           << "  <g clip-path=\"url(#window)\">\n";
        for (const Rectangle& r : rects) {
            const double x = cell * static_cast<double>(r.x_min);
            const double y = panel_h - cell * static_cast<double>(r.y_max + 1);
            const double w = cell * static_cast<double>(r.width());
            const double h = cell * static_cast<double>(r.height());
            const char* colour = kLevelColors[r.level % std::size(kLevelColors)];
            os << "    <g><title>" << to_string(r.family) << " level " << r.level << " band " << r.band
               << "</title>"
               << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << w << "\" height=\"" << h
               << "\" fill=\"" << colour << "\" fill-opacity=\"0.55\" stroke=\"#222\" stroke-width=\"1\"/>"
               << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << w << "\" height=\"" << h
               << "\" fill=\"url(#" << hatch << ")\"/></g>\n";
        }
        os << "  </g>\n"
           << "  <rect x=\"0\" y=\"0\" width=\"" << panel_w << "\" height=\"" << panel_h
           << "\" fill=\"none\" stroke=\"#000\"/>\n"
           << "</g>\n";
    };
    panel(source, gap, "source rectangles", "hatch-src");
    panel(translated, 2 * gap + panel_w, "translated rectangles", "hatch-tilde");
    os << "</svg>\n";
}

} // namespace detail

/// Runs the CLI on `args` (args[0] is the program name). Returns the exit
/// code: 0 success, 1 verification failure, 2 invalid input.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Successor and predecessor queries in {p1^i p2^j} via continued fractions",
                 "lattice-succ"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig config;
    std::string format = "text";
    app.add_option("--p1", config.p1, "smaller generator")->capture_default_str();
    app.add_option("--p2", config.p2, "larger generator")->capture_default_str();
    app.add_option("--bit-budget", config.bit_budget, "cap on the size of exact powers, in bits")
        ->envname(kBudgetEnv)
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "jsonl", "tsv"}))
        ->capture_default_str();

    std::size_t depth = 10;
    auto* cf_cmd = app.add_subcommand("cf", "partial quotients and convergents");
    cf_cmd->add_option("--depth", depth, "last convergent index")->capture_default_str();

    Exponent coord_i = 0, coord_j = 0;
    bool with_value = false;
    auto* next_cmd = app.add_subcommand("next", "successor of p1^i p2^j");
    auto* prev_cmd = app.add_subcommand("prev", "predecessor of p1^i p2^j");
    for (auto* cmd : {next_cmd, prev_cmd}) {
        cmd->add_option("--i", coord_i, "exponent of p1")->required()->check(CLI::NonNegativeNumber);
        cmd->add_option("--j", coord_j, "exponent of p2")->required()->check(CLI::NonNegativeNumber);
        cmd->add_flag("--value", with_value, "also print exact integer values");
    }

    std::size_t count = 20;
    auto* enum_cmd = app.add_subcommand("enum", "first elements in increasing order");
    enum_cmd->add_option("--count", count, "number of elements")->check(CLI::PositiveNumber)->capture_default_str();

    Exponent width = 20, height = 20;
    bool tilde = false;
    std::string svg_path;
    auto* tile_cmd = app.add_subcommand("tile", "rectangle decomposition over a window");
    tile_cmd->add_option("--width", width)->check(CLI::PositiveNumber)->capture_default_str();
    tile_cmd->add_option("--height", height)->check(CLI::PositiveNumber)->capture_default_str();
    tile_cmd->add_flag("--tilde", tilde, "list the translated (successor) rectangles");
    tile_cmd->add_option("--svg", svg_path, "also render both tilings to this SVG file");

    std::size_t levels = 4;
    std::string corner = "A";
    auto* gaps_cmd = app.add_subcommand("gaps", "large-gap witnesses per level");
    gaps_cmd->add_option("--levels", levels)->check(CLI::PositiveNumber)->capture_default_str();
    gaps_cmd->add_option("--corner", corner, "rectangle family of the witness corner")
        ->check(CLI::IsMember({"A", "P"}))
        ->capture_default_str();

    std::string window = "100x100";
    Exponent scan = 1000;
    std::size_t verify_depth = 10;
    std::size_t oracle_count = 5000;
    auto* verify_cmd = app.add_subcommand("verify", "run every property suite");
    verify_cmd->add_option("--window", window, "WxH window for partition and inverse checks")->capture_default_str();
    verify_cmd->add_option("--scan", scan, "N for the record-subsequence scan")->check(CLI::PositiveNumber)->capture_default_str();
    verify_cmd->add_option("--depth", verify_depth, "convergent depth for table and identity checks")->capture_default_str();
    verify_cmd->add_option("--oracle-count", oracle_count, "elements compared against enumeration")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    std::size_t bench_count = 2000;
    auto* bench_cmd = app.add_subcommand("bench", "successor walk: tiling vs enumeration");
    bench_cmd->add_option("--count", bench_count, "number of successor steps")->check(CLI::PositiveNumber)->capture_default_str();

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    config.format = format == "jsonl" ? Format::JsonLines : format == "tsv" ? Format::Tsv : Format::Text;
    RecordWriter writer(out, config.format);

    try {
        const GeneratorPair pair = validate_pair(config.p1, config.p2).with_bit_budget(config.bit_budget);
        ConvergentTable table(pair);

        if (*cf_cmd) {
            table.extend_to(depth);
            if (config.format == Format::Text) {
                out << "quotients";
                for (Exponent a : table.quotients()) out << ' ' << a;
                out << "\nconvergents";
                for (std::size_t i = 0; i <= table.depth(); ++i)
                    out << ' ' << table.numerator(i) << '/' << table.denominator(i);
                out << '\n';
            } else {
                for (std::size_t i = 0; i <= table.depth(); ++i) {
                    writer.write({{"index", i},
                                  {"quotient", table.quotient(i)},
                                  {"numerator", table.numerator(i)},
                                  {"denominator", table.denominator(i)}},
                                 "");
                }
            }
            return 0;
        }

        if (*next_cmd || *prev_cmd) {
            const GridPoint p{coord_i, coord_j};
            const GridPoint q = *next_cmd ? next(table, p) : prev(table, p);
            std::vector<RecordWriter::Field> fields{{"i", q.i}, {"j", q.j}};
            std::string text = detail::point_text(q);
            if (with_value) {
                const std::string v = value(pair, q).get_str();
                fields.push_back({"value", v});
                text += " " + v;
            }
            writer.write(fields, text);
            return 0;
        }

        if (*enum_cmd) {
            SortedStream stream(pair);
            for (std::size_t n = 0; n < count; ++n) {
                const Element e = stream.next();
                const std::string v = e.value.get_str();
                writer.write({{"index", n}, {"i", e.point.i}, {"j", e.point.j}, {"value", v}},
                             std::to_string(n) + " " + detail::point_text(e.point) + " " + v);
            }
            return 0;
        }

        if (*tile_cmd) {
            const auto rects = rectangles_in_window(table, width, height, tilde);
            for (const Rectangle& r : rects) {
                std::ostringstream text;
                text << to_string(r.family) << ' ' << r.level << ' ' << r.band << " x[" << r.x_min << ','
                     << r.x_max << "] y[" << r.y_min << ',' << r.y_max << ']';
                writer.write({{"family", detail::family_name(r.family)},
                              {"level", r.level},
                              {"band", r.band},
                              {"x_min", r.x_min},
                              {"x_max", r.x_max},
                              {"y_min", r.y_min},
                              {"y_max", r.y_max}},
                             text.str());
            }
            if (!svg_path.empty()) {
                std::ofstream svg(svg_path);
                if (!svg) throw UsageError("cannot write SVG to '" + svg_path + "'");
                detail::write_svg(svg, rectangles_in_window(table, width, height, false),
                                  rectangles_in_window(table, width, height, true), width, height);
            }
            return 0;
        }

        if (*gaps_cmd) {
            const GapCorner which = corner == "P" ? GapCorner::P : GapCorner::A;
            for (std::size_t level = which == GapCorner::A ? 1 : 0; level <= levels; ++level) {
                const GapWitness w = large_gap(table, level, which);
                const std::string gap = w.gap.get_str();
                writer.write({{"level", level},
                              {"i", w.point.i},
                              {"j", w.point.j},
                              {"succ_i", w.succ.i},
                              {"succ_j", w.succ.j},
                              {"gap", gap}},
                             std::to_string(level) + " " + detail::point_text(w.point) + " -> " +
                                 detail::point_text(w.succ) + " gap " + gap);
            }
            return 0;
        }

        if (*verify_cmd) {
            const auto [w, h] = detail::parse_window(window);
            bool all_passed = true;
            auto suite = [&](const std::string& name, const std::function<VerifyReport()>& body) {
                VerifyReport report;
                try {
                    report = body();
                } catch (const Error& e) {
                    report.fail(std::string("error: ") + e.what());
                }
                all_passed = all_passed && report.passed;
                writer.write({{"suite", name},
                              {"passed", report.passed},
                              {"checks", report.checks},
                              {"failure", report.failure}},
                             std::string(report.passed ? "PASS " : "FAIL ") + name + " (" +
                                 std::to_string(report.checks) + " checks)" +
                                 (report.passed ? "" : ": " + report.failure));
            };

            suite("convergent-table", [&] {
                table.extend_to(verify_depth);
                return verify_convergent_table(table);
            });
            suite("partition", [&] { return static_cast<VerifyReport>(verify_partition(table, w, h, false)); });
            suite("partition-translated", [&] {
                return static_cast<VerifyReport>(verify_partition(table, w, h, true));
            });
            suite("oracle-agreement", [&] {
                VerifyReport r;
                SortedStream stream(pair);
                GridPoint current = stream.next_point();
                for (std::size_t n = 1; n < oracle_count && r.passed; ++n) {
                    const GridPoint expected = stream.next_point();
                    ++r.checks;
                    const GridPoint got = next(table, current);
                    if (got != expected)
                        r.fail("next" + detail::point_text(current) + " = " + detail::point_text(got) +
                               ", enumeration gives " + detail::point_text(expected));
                    current = expected;
                }
                return r;
            });
            suite("inverse", [&] {
                VerifyReport r;
                for (Exponent i = 0; i < w && r.passed; ++i) {
                    for (Exponent j = 0; j < h && r.passed; ++j) {
                        const GridPoint p{i, j};
                        r.checks += 2;
                        if (prev(table, next(table, p)) != p) r.fail("prev(next" + detail::point_text(p) + ") differs");
                        if (p != GridPoint{0, 0} && next(table, prev(table, p)) != p)
                            r.fail("next(prev" + detail::point_text(p) + ") differs");
                    }
                }
                return r;
            });
            suite("fg-identities", [&] { return verify_fg_at_convergents(table, verify_depth); });
            suite("monotone-chains", [&] { return verify_monotone_fractional_chains(table, verify_depth); });
            suite("record-subsequences", [&] { return verify_record_theorem(table, scan); });
            return all_passed ? 0 : 1;
        }

        if (*bench_cmd) {
            using clock = std::chrono::steady_clock;
            std::vector<GridPoint> walk;
            walk.reserve(bench_count + 1);
            const auto t0 = clock::now();
            GridPoint p{0, 0};
            walk.push_back(p);
            for (std::size_t n = 0; n < bench_count; ++n) walk.push_back(p = next(table, p));
            const auto t1 = clock::now();
            bool agree = true;
            for (std::size_t n = 0; n < bench_count; ++n)
                agree = agree && naive_next(pair, walk[n]) == walk[n + 1];
            const auto t2 = clock::now();
            const double tiling_s = std::chrono::duration<double>(t1 - t0).count();
            const double oracle_s = std::chrono::duration<double>(t2 - t1).count();
            const double speedup = oracle_s / std::max(tiling_s, 1e-9);
            std::ostringstream text;
            text << "steps " << bench_count << "\ntiling_seconds " << tiling_s << "\noracle_seconds "
                 << oracle_s << "\nspeedup " << speedup << "\nwalks_agree " << (agree ? "yes" : "no");
            writer.write({{"steps", bench_count},
                          {"tiling_seconds", tiling_s},
                          {"oracle_seconds", oracle_s},
                          {"speedup", speedup},
                          {"walks_agree", agree}},
                         text.str());
            return agree && oracle_s >= tiling_s ? 0 : 1;
        }
    } catch (const NoPredecessor&) {
        err << "error: no predecessor: (0,0) is the least element\n";
        return 2;
    } catch (const RationalLogRatio& e) {
        err << "error: theory requires multiplicatively independent generators (" << e.what() << ")\n";
        return 2;
    } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << " (raise --bit-budget or " << kBudgetEnv << ")\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

} // namespace lattice_succ::cli
