#include "fdt/problem_io.hpp"

#include "fdt/series.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <charconv>
#include <map>
#include <optional>
#include <sstream>

namespace fdt {

ParseError::ParseError(int line, int column, const std::string& what)
    : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

namespace {

std::string join(const std::vector<std::string>& items, std::string_view sep) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) out += sep;
        out += items[i];
    }
    return out;
}

} // namespace

ValidationError::ValidationError(std::vector<std::string> violations)
    : Error("invalid problem: " + join(violations, "; ")), violations_(std::move(violations)) {}

namespace {

constexpr std::string_view kUnicodeMinus = "\xE2\x88\x92";

/// Scanner over one line fragment; `column0` is the 1-based column of text[0].
class Cursor {
public:
    Cursor(std::string_view text, int line, int column0) : text_(text), line_(line), column0_(column0) {}

    void skip_space() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\r')) ++pos_;
    }
    [[nodiscard]] bool done() {
        skip_space();
        return pos_ >= text_.size();
    }
    [[nodiscard]] char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    bool accept(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }
    /// Returns +1 / -1 for a sign token, 0 if none.
    int accept_sign() {
        skip_space();
        if (accept('+')) return 1;
        if (accept('-')) return -1;
        if (text_.substr(pos_).starts_with(kUnicodeMinus)) {
            pos_ += kUnicodeMinus.size();
            return -1;
        }
        return 0;
    }
    std::optional<double> number() {
        skip_space();
        const std::size_t start = pos_;
        auto digits = [&] {
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        };
        digits();
        if (pos_ < text_.size() && text_[pos_] == '.') {
            ++pos_;
            digits();
        }
        if (pos_ == start) return std::nullopt;
        if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
            std::size_t save = pos_++;
            if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
            const std::size_t exp_start = pos_;
            digits();
            if (pos_ == exp_start) pos_ = save;
        }
        const auto token = text_.substr(start, pos_ - start);
        double value = 0.0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc{} || ptr != token.data() + token.size()) fail(start, "bad number '" + std::string(token) + "'");
        // p/q literal
        const std::size_t save = pos_;
        if (accept('/')) {
            const std::size_t den_start = pos_;
            auto den = number();
            if (!den || *den == 0.0) fail(den_start, "bad rational denominator");
            if (token.find_first_of(".eE") != std::string_view::npos) fail(start, "rational literal needs integers");
            value /= *den;
        } else {
            pos_ = save;
        }
        return value;
    }
    long integer() {
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        long v = 0;
        auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, v);
        if (start == pos_ || ec != std::errc{}) fail(start, "expected a nonnegative integer exponent");
        return v;
    }
    [[noreturn]] void fail(std::size_t at, const std::string& what) const {
        throw ParseError(line_, column0_ + static_cast<int>(at), what);
    }
    [[noreturn]] void fail(const std::string& what) const { fail(pos_, what); }
    [[nodiscard]] std::size_t pos() const noexcept { return pos_; }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
    int line_;
    int column0_;
};

Polynomial parse_polynomial_at(std::string_view text, int line, int column0) {
    Cursor cur(text, line, column0);
    if (cur.done()) cur.fail("empty polynomial");
    std::vector<double> c;
    bool first = true;
    while (!cur.done()) {
        int sign = cur.accept_sign();
        if (sign == 0) {
            if (!first) cur.fail("expected '+' or '-' between terms");
            sign = 1;
        }
        first = false;
        double coeff = 1.0;
        std::size_t power = 0;
        bool has_t = false;
        if (auto num = cur.number()) {
            coeff = *num;
            if (cur.accept('*')) {
                if (!cur.accept('t')) cur.fail("expected 't' after '*'");
                has_t = true;
            }
        } else if (cur.accept('t')) {
            has_t = true;
        } else {
            cur.fail("expected a coefficient or 't'");
        }
        if (has_t) {
            power = 1;
            if (cur.accept('^')) power = static_cast<std::size_t>(cur.integer());
        }
        if (c.size() <= power) c.resize(power + 1, 0.0);
        c[power] += sign * coeff;
    }
    return Polynomial(std::move(c));
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

struct Line {
    int number;
    std::string_view text;  // comment stripped, untrimmed
};

/// Comma-separated fields with their starting column.
std::vector<std::pair<std::string_view, int>> split_fields(std::string_view text, int column0) {
    std::vector<std::pair<std::string_view, int>> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i == text.size() || text[i] == ',') {
            out.emplace_back(text.substr(start, i - start), column0 + static_cast<int>(start));
            start = i + 1;
        }
    }
    return out;
}

Rational parse_rational_field(std::string_view text, int line, int column, const std::string& key) {
    const auto t = trim(text);
    if (t.empty()) throw ParseError(line, column, "missing value for '" + key + "'");
    for (char ch : t)
        if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '/' || ch == '-' || ch == '+' || ch == ' '))
            throw ParseError(line, column, "'" + key + "' must be an exact rational p/q, got '" + std::string(t) + "'");
    try {
        return Rational::parse(t);
    } catch (const Error& e) {
        throw ParseError(line, column, std::string(e.what()) + " in '" + key + "'");
    }
}

long parse_int_field(std::string_view text, int line, int column, const std::string& key) {
    const auto t = trim(text);
    long v = 0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (t.empty() || ec != std::errc{} || ptr != t.data() + t.size())
        throw ParseError(line, column, "'" + key + "' must be an integer, got '" + std::string(t) + "'");
    return v;
}

} // namespace

Polynomial parse_polynomial(std::string_view text) { return parse_polynomial_at(text, 1, 1); }

std::string format_polynomial(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    const auto c = p.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0.0) continue;
        const bool neg = std::signbit(c[i]);
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        out += format_real(neg ? -c[i] : c[i]);
        if (i >= 1) out += "*t";
        if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
}

Problem parse_problem(std::string_view text) {
    std::vector<Line> lines;
    {
        int number = 0;
        std::size_t start = 0;
        while (start <= text.size()) {
            auto end = text.find('\n', start);
            if (end == std::string_view::npos) end = text.size();
            ++number;
            auto body = text.substr(start, end - start);
            if (auto hash = body.find('#'); hash != std::string_view::npos) body = body.substr(0, hash);
            lines.push_back({number, body});
            start = end + 1;
        }
    }

    std::map<std::string, std::pair<std::string_view, std::pair<int, int>>> keys;  // header + [solver] keys
    std::map<std::string, std::vector<Line>> sections;
    std::map<std::string, int> section_line;
    std::string current;  // "" = header

    for (const auto& ln : lines) {
        const auto body = trim(ln.text);
        if (body.empty()) continue;
        const int indent = static_cast<int>(ln.text.find_first_not_of(" \t")) + 1;
        if (body.front() == '[') {
            if (body.back() != ']') throw ParseError(ln.number, indent, "unterminated section header");
            current = std::string(trim(body.substr(1, body.size() - 2)));
            const bool known = current == "B" || current == "u" || current == "phi" || current == "solver" ||
                               (current.size() >= 2 && current[0] == 'A' &&
                                current.find_first_not_of("0123456789", 1) == std::string::npos);
            if (!known) throw ParseError(ln.number, indent, "unknown section [" + current + "]");
            if (sections.contains(current)) throw ParseError(ln.number, indent, "duplicate section [" + current + "]");
            sections[current];
            section_line[current] = ln.number;
            continue;
        }
        if (current.empty() || current == "solver") {
            const auto eq = ln.text.find('=');
            if (eq == std::string_view::npos) throw ParseError(ln.number, indent, "expected 'key = value'");
            std::string key(trim(ln.text.substr(0, eq)));
            if (key.empty()) throw ParseError(ln.number, indent, "missing key before '='");
            if (current == "solver") key = "solver." + key;
            if (keys.contains(key)) throw ParseError(ln.number, indent, "duplicate key '" + key + "'");
            keys[key] = {ln.text.substr(eq + 1), {ln.number, static_cast<int>(eq) + 2}};
            continue;
        }
        sections[current].push_back(ln);
    }

    static const std::vector<std::string> known_keys = {"nu", "state_dim", "control_dim", "delays", "horizon",
                                                        "solver.K", "solver.sample_step"};
    for (const auto& [key, val] : keys)
        if (std::find(known_keys.begin(), known_keys.end(), key) == known_keys.end())
            throw ParseError(val.second.first, 1, "unknown key '" + key + "'");

    auto require_key = [&](const std::string& key) -> const std::pair<std::string_view, std::pair<int, int>>& {
        auto it = keys.find(key);
        if (it == keys.end()) throw ParseError(static_cast<int>(lines.size()), 1, "missing key '" + key + "'");
        return it->second;
    };

    Problem prob;
    DelaySystem& sys = prob.system;
    {
        const auto& [v, pos] = require_key("nu");
        sys.nu = parse_rational_field(v, pos.first, pos.second, "nu");
    }
    {
        const auto& [v, pos] = require_key("state_dim");
        const long n = parse_int_field(v, pos.first, pos.second, "state_dim");
        if (n <= 0) throw ParseError(pos.first, pos.second, "state_dim must be positive");
        sys.n = static_cast<std::size_t>(n);
    }
    {
        const auto& [v, pos] = require_key("control_dim");
        const long m = parse_int_field(v, pos.first, pos.second, "control_dim");
        if (m <= 0) throw ParseError(pos.first, pos.second, "control_dim must be positive");
        sys.m = static_cast<std::size_t>(m);
    }
    {
        const auto& [v, pos] = require_key("horizon");
        sys.horizon = parse_rational_field(v, pos.first, pos.second, "horizon");
    }
    if (auto it = keys.find("delays"); it != keys.end() && !trim(it->second.first).empty()) {
        const auto& [v, pos] = it->second;
        for (const auto& [field, col] : split_fields(v, pos.second))
            sys.delays.push_back(parse_rational_field(field, pos.first, col, "delays"));
    }
    if (auto it = keys.find("solver.K"); it != keys.end()) {
        const auto& [v, pos] = it->second;
        prob.config.K = static_cast<int>(parse_int_field(v, pos.first, pos.second, "K"));
    }
    if (auto it = keys.find("solver.sample_step"); it != keys.end()) {
        const auto& [v, pos] = it->second;
        prob.config.sample_step = parse_rational_field(v, pos.first, pos.second, "sample_step");
    }

    auto section_rows = [&](const std::string& name, std::size_t rows, std::size_t cols) {
        PolyMatrix M(rows, cols);
        const auto& body = sections.at(name);
        if (body.size() != rows)
            throw ParseError(section_line.at(name), 1,
                             "dimension mismatch: [" + name + "] has " + std::to_string(body.size()) + " rows, expected " +
                                 std::to_string(rows));
        for (std::size_t i = 0; i < rows; ++i) {
            const auto fields = split_fields(body[i].text, 1);
            if (fields.size() != cols)
                throw ParseError(body[i].number, 1,
                                 "dimension mismatch: [" + name + "] row has " + std::to_string(fields.size()) +
                                     " entries, expected " + std::to_string(cols));
            for (std::size_t j = 0; j < cols; ++j)
                M(i, j) = parse_polynomial_at(fields[j].first, body[i].number, fields[j].second);
        }
        return M;
    };
    auto section_vector = [&](const std::string& name, std::size_t count) {
        const PolyMatrix M = section_rows(name, count, 1);
        return std::vector<Polynomial>(M.entries().begin(), M.entries().end());
    };
    auto require_section = [&](const std::string& name) {
        if (!sections.contains(name))
            throw ParseError(static_cast<int>(lines.size()), 1, "missing section [" + name + "]");
    };

    const std::size_t r = sys.delays.size();
    for (const auto& [name, body] : sections) {
        if (name[0] != 'A') continue;
        const auto idx = std::stoul(name.substr(1));
        if (idx > r)
            throw ParseError(section_line.at(name), 1,
                             "section [" + name + "] has no matching delay (r = " + std::to_string(r) + ")");
    }
    sys.A.push_back(sections.contains("A0") ? section_rows("A0", sys.n, sys.n) : PolyMatrix(sys.n, sys.n));
    for (std::size_t i = 1; i <= r; ++i) {
        const std::string name = "A" + std::to_string(i);
        require_section(name);
        sys.A.push_back(section_rows(name, sys.n, sys.n));
    }
    require_section("B");
    sys.B = section_rows("B", sys.n, sys.m);
    require_section("u");
    sys.u = section_vector("u", sys.m);
    require_section("phi");
    sys.phi = section_vector("phi", sys.n);

    auto violations = validate(sys);
    for (auto& v : validate(prob.config)) violations.push_back(std::move(v));
    if (!violations.empty()) throw ValidationError(std::move(violations));
    return prob;
}

std::string serialize_problem(const Problem& problem) {
    const DelaySystem& sys = problem.system;
    std::ostringstream os;
    os << "nu = " << sys.nu << "\n";
    os << "state_dim = " << sys.n << "\n";
    os << "control_dim = " << sys.m << "\n";
    if (!sys.delays.empty()) {
        os << "delays = ";
        for (std::size_t i = 0; i < sys.delays.size(); ++i) os << (i ? ", " : "") << sys.delays[i];
        os << "\n";
    }
    os << "horizon = " << sys.horizon << "\n";
    auto matrix = [&](const std::string& name, const PolyMatrix& M) {
        os << "[" << name << "]\n";
        for (std::size_t i = 0; i < M.rows(); ++i) {
            for (std::size_t j = 0; j < M.cols(); ++j) os << (j ? ", " : "") << format_polynomial(M(i, j));
            os << "\n";
        }
    };
    for (std::size_t i = 0; i < sys.A.size(); ++i) matrix("A" + std::to_string(i), sys.A[i]);
    matrix("B", sys.B);
    os << "[u]\n";
    for (const auto& p : sys.u) os << format_polynomial(p) << "\n";
    os << "[phi]\n";
    for (const auto& p : sys.phi) os << format_polynomial(p) << "\n";
    os << "[solver]\n";
    os << "K = " << problem.config.K << "\n";
    os << "sample_step = " << problem.config.sample_step << "\n";
    return os.str();
}

} // namespace fdt
