#include "polarcog/cli.hpp"

#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "polarcog/cotree.hpp"
#include "polarcog/counting.hpp"
#include "polarcog/errors.hpp"
#include "polarcog/graph6.hpp"
#include "polarcog/obstructions.hpp"
#include "polarcog/polarity.hpp"
#include "polarcog/serialize.hpp"

namespace polarcog::cli {

Format parse_format(const std::string& name) {
    if (name.empty() || name == "default") return Format::Default;
    if (name == "json") return Format::Json;
    if (name == "g6") return Format::G6;
    if (name == "csv") return Format::Csv;
    if (name == "text") return Format::Text;
    throw InvalidInput("unknown output format '" + name + "'");
}

namespace {

struct LineResult {
    std::string out;
    std::string err;
    int code = kExitOk;
};

std::string p4_text(const P4Witness& w) {
    return "P4 " + std::to_string(w.path[0]) + " " + std::to_string(w.path[1]) + " " + std::to_string(w.path[2]) +
           " " + std::to_string(w.path[3]);
}

Format resolve(Format f, Format fallback, std::initializer_list<Format> allowed, const char* command) {
    const Format r = f == Format::Default ? fallback : f;
    for (Format a : allowed)
        if (a == r) return r;
    throw InvalidInput(std::string("unsupported output format for ") + command);
}

int require_s(const Command& cmd, const char* command) {
    if (!cmd.s) throw InvalidInput(std::string(command) + " needs -s");
    if (*cmd.s < 0) throw InvalidInput("s must be non-negative");
    return *cmd.s;
}

LineResult check_line(const Graph& g, std::optional<int> s, Format fmt) {
    const ExtNat best = monopolar_index(g);
    if (fmt == Format::Json) {
        nlohmann::json j{{"min_s", best.is_finite() ? nlohmann::json(best.value()) : nlohmann::json(nullptr)}};
        if (s) j["polar"] = best <= ExtNat(static_cast<std::uint32_t>(*s));
        return {j.dump(), {}, kExitOk};
    }
    if (best.is_infinite()) return {"non-polar-for-all-s", {}, kExitOk};
    if (s && best > ExtNat(static_cast<std::uint32_t>(*s)))
        return {"non-polar s=" + std::to_string(*s) + " min s=" + best.to_string(), {}, kExitOk};
    return {"polar s=" + best.to_string(), {}, kExitOk};
}

LineResult certify_line(const Graph& g, int s) {
    const Certificate c = find_certificate(g, s);
    if (!certificate_is_valid(g, c, s)) throw std::logic_error("certificate failed re-validation");
    return {to_json(c).dump(), {}, kExitOk};
}

LineResult cotree_line(const Graph& g, Format fmt) {
    const CotreeResult r = build_cotree(g);
    if (const auto* w = std::get_if<P4Witness>(&r)) {
        if (fmt == Format::Json) return {nlohmann::json{{"p4", w->path}}.dump(), {}, kExitNotCograph};
        return {p4_text(*w), {}, kExitNotCograph};
    }
    const std::string text = std::get<Cotree>(r).to_string();
    if (fmt == Format::Json) return {nlohmann::json{{"cotree", text}}.dump(), {}, kExitOk};
    return {text, {}, kExitOk};
}

int run_per_line(const Command& cmd, std::istream& in, std::ostream& out, std::ostream& err) {
    Format fmt = Format::Text;
    int s = 0;
    switch (cmd.sub) {
        case Subcommand::Check: fmt = resolve(cmd.format, Format::Text, {Format::Text, Format::Json}, "check"); break;
        case Subcommand::Certify:
            fmt = resolve(cmd.format, Format::Json, {Format::Json}, "certify");
            s = require_s(cmd, "certify");
            break;
        default: fmt = resolve(cmd.format, Format::Text, {Format::Text, Format::Json}, "cotree"); break;
    }
    if (cmd.sub == Subcommand::Check && cmd.s && *cmd.s < 0) throw InvalidInput("s must be non-negative");

    std::vector<std::string> lines;
    std::vector<std::size_t> line_numbers;
    std::string line;
    for (std::size_t number = 1; std::getline(in, line); ++number) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        lines.push_back(line);
        line_numbers.push_back(number);
    }

    const bool json_out = fmt == Format::Json;
    std::vector<LineResult> results(lines.size());
    const long count = static_cast<long>(lines.size());
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < count; ++i) {
        LineResult& r = results[i];
        const std::string where = "line " + std::to_string(line_numbers[i]) + ": ";
        try {
            const Graph g = graph6_decode(lines[i]);
            if (g.order() == 0) throw InvalidInput("graph has no vertices");
            switch (cmd.sub) {
                case Subcommand::Check: r = check_line(g, cmd.s, fmt); break;
                case Subcommand::Certify: r = certify_line(g, s); break;
                default: r = cotree_line(g, fmt); break;
            }
        } catch (const NotCograph& e) {
            r.code = kExitNotCograph;
            r.err = where + e.what();
            r.out = json_out ? nlohmann::json{{"error", "not a cograph"}, {"p4", e.witness().path}}.dump()
                             : "not-a-cograph " + p4_text(e.witness());
        } catch (const std::exception& e) {
            r.code = kExitInputError;
            r.err = where + e.what();
            r.out = json_out ? nlohmann::json{{"error", e.what()}}.dump() : "error";
        }
    }

    int code = kExitOk;
    for (const LineResult& r : results) {
        out << r.out << '\n';
        if (!r.err.empty()) err << r.err << '\n';
        if (r.code == kExitInputError || (r.code == kExitNotCograph && code == kExitOk)) code = r.code;
    }
    return code;
}

int run_generate(const Command& cmd, std::ostream& out) {
    const Format fmt = resolve(cmd.format, Format::G6, {Format::G6, Format::Json, Format::Text}, "generate");
    const int s = require_s(cmd, "generate");
    const std::vector<FamilyMember> members = family(s);
    const nlohmann::json catalog = catalog_json(members);
    if (!cmd.catalog_path.empty()) {
        std::ofstream file(cmd.catalog_path);
        if (!file) throw InvalidInput("cannot write catalog to " + cmd.catalog_path);
        file << catalog.dump(2) << '\n';
    }
    if (fmt == Format::Json) {
        out << catalog.dump(2) << '\n';
        return kExitOk;
    }
    for (const FamilyMember& m : members) {
        if (fmt == Format::Text) out << m.expr.to_string() << '\t';
        out << graph6_encode(m.graph) << '\n';
    }
    return kExitOk;
}

int run_count(const Command& cmd, std::ostream& out) {
    resolve(cmd.format, Format::Csv, {Format::Csv}, "count");
    if (cmd.s_max < 2) throw InvalidInput("count needs --s-max >= 2");
    if (cmd.s_max > kMaxBoundsParameter)
        throw LimitExceeded("count is capped at --s-max " + std::to_string(kMaxBoundsParameter));
    out << "s,D,n_disc,total,m,bound_3m,bound_3s2\n";
    for (int s = 2; s <= cmd.s_max; ++s) {
        const CountReport r = bounds_report(s);
        char real[64];
        std::snprintf(real, sizeof real, "%.10g", r.bound_3s2);
        out << s << ',' << r.d << ',' << r.n_disc << ',' << total_obstruction_count(s) << ',' << r.m << ','
            << r.bound_3m << ',' << real << '\n';
    }
    return kExitOk;
}

int run_enumerate(const Command& cmd, std::ostream& out) {
    const Format fmt = resolve(cmd.format, Format::G6, {Format::G6, Format::Text}, "enumerate");
    for (const Cotree& t : enumerate_cographs(cmd.n))
        out << (fmt == Format::Text ? t.to_string() : graph6_encode(realize(t))) << '\n';
    return kExitOk;
}

}  // namespace

int run(const Command& cmd, std::istream& in, std::ostream& out, std::ostream& err) {
    try {
        switch (cmd.sub) {
            case Subcommand::Generate: return run_generate(cmd, out);
            case Subcommand::Count: return run_count(cmd, out);
            case Subcommand::Enumerate: return run_enumerate(cmd, out);
            default: return run_per_line(cmd, in, out, err);
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    }
}

}  // namespace polarcog::cli
