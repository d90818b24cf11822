#include "fusionkit/report.hpp"

#include <sstream>

#include "json.hpp"

namespace fusionkit {

namespace {

// Display width of a UTF-8 cell: count code points, not bytes.
size_t display_width(const std::string& s) {
    size_t w = 0;
    for (unsigned char c : s)
        if ((c & 0xC0) != 0x80) ++w;
    return w;
}

std::string pad(const std::string& s, size_t width) {
    return s + std::string(width - display_width(s), ' ');
}

}  // namespace

std::string render_table(const std::vector<std::string>& headers,
                         const std::vector<std::vector<std::string>>& rows, bool ascii) {
    size_t cols = headers.size();
    std::vector<size_t> width(cols, 0);
    for (size_t c = 0; c < cols; ++c) width[c] = display_width(headers[c]);
    for (const auto& row : rows)
        for (size_t c = 0; c < cols && c < row.size(); ++c)
            width[c] = std::max(width[c], display_width(row[c]));

    const char* v = ascii ? "|" : "│";
    const char* h = ascii ? "-" : "─";
    auto rule = [&](const char* l, const char* m, const char* r) {
        std::string out = l;
        for (size_t c = 0; c < cols; ++c) {
            for (size_t i = 0; i < width[c] + 2; ++i) out += h;
            out += (c + 1 < cols) ? m : r;
        }
        return out + "\n";
    };
    auto line = [&](const std::vector<std::string>& cells) {
        std::string out = v;
        for (size_t c = 0; c < cols; ++c) {
            out += " " + pad(c < cells.size() ? cells[c] : "", width[c]) + " ";
            out += v;
        }
        return out + "\n";
    };

    std::string out;
    out += ascii ? rule("+", "+", "+") : rule("┌", "┬", "┐");
    out += line(headers);
    out += ascii ? rule("+", "+", "+") : rule("├", "┼", "┤");
    for (const auto& row : rows) out += line(row);
    out += ascii ? rule("+", "+", "+") : rule("└", "┴", "┘");
    return out;
}

std::string render_report(const VerificationReport& rep, bool ascii) {
    const char* ok = ascii ? "PASS" : "✓ PASS";
    const char* bad = ascii ? "FAIL" : "✗ FAIL";
    std::ostringstream out;
    size_t failed = 0;
    for (const auto& c : rep.checks) {
        out << (c.pass ? ok : bad) << "  " << c.id;
        if (!c.tag.empty()) out << "  [" << c.tag << "]";
        if (!c.pass && !c.detail.empty()) out << "\n      " << c.detail;
        out << "\n";
        if (!c.pass) ++failed;
    }
    out << (failed == 0 ? "all " : "") << rep.checks.size() - failed << " of "
        << rep.checks.size() << " checks passed\n";
    return out.str();
}

std::string report_to_json(const VerificationReport& rep) {
    nlohmann::ordered_json j;
    j["pass"] = rep.all_pass();
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : rep.checks)
        j["checks"].push_back(
            {{"id", c.id}, {"pass", c.pass}, {"detail", c.detail}, {"tag", c.tag}});
    return j.dump(2) + "\n";
}

}  // namespace fusionkit
