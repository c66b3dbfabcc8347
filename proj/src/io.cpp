#include "toric/io.hpp"

#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>

namespace toric::io {

namespace {

struct Token {
    std::string text;
    std::size_t column = 0; // 1-based
};

std::vector<Token> split_whitespace(const std::string& line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i >= line.size()) break;
        std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        out.push_back({line.substr(start, i - start), start + 1});
    }
    return out;
}

bool is_integer(const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i >= s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

Integer parse_integer(const std::string& s, std::size_t line, std::size_t column) {
    if (!is_integer(s)) throw ParseError(line, column, "expected an integer, found '" + s + "'");
    return Integer(s[0] == '+' ? s.substr(1) : s);
}

} // namespace

LabeledPolytope parse_polytope(const std::string& text) {
    LabeledPolytope p;
    std::optional<std::size_t> dim;
    std::istringstream in(text);
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = raw.substr(0, raw.find('#'));
        auto tokens = split_whitespace(line);
        if (tokens.empty()) continue;
        const Token& head = tokens.front();

        if (head.text == "dimension") {
            if (dim) throw ParseError(line_no, head.column, "duplicate 'dimension'");
            if (tokens.size() != 2) throw ParseError(line_no, head.column, "expected 'dimension <n>'");
            Integer n = parse_integer(tokens[1].text, line_no, tokens[1].column);
            if (n <= 0 || n > 64) throw ParseError(line_no, tokens[1].column, "dimension must be in 1..64");
            dim = static_cast<std::size_t>(n);
            p.dim = *dim;
        } else if (head.text == "facet") {
            if (!dim) throw ParseError(line_no, head.column, "'facet' before 'dimension'");
            std::optional<std::vector<Integer>> normal;
            std::optional<Integer> label;
            std::optional<Rational> offset;
            for (std::size_t k = 1; k < tokens.size(); ++k) {
                const Token& tok = tokens[k];
                auto eq = tok.text.find('=');
                if (eq == std::string::npos) throw ParseError(line_no, tok.column, "expected key=value");
                std::string key = tok.text.substr(0, eq);
                std::string value = tok.text.substr(eq + 1);
                std::size_t value_col = tok.column + eq + 1;
                if (key == "normal") {
                    if (normal) throw ParseError(line_no, tok.column, "duplicate 'normal'");
                    std::vector<Integer> v;
                    std::size_t start = 0;
                    for (;;) {
                        auto comma = value.find(',', start);
                        std::string part = value.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
                        v.push_back(parse_integer(part, line_no, value_col + start));
                        if (comma == std::string::npos) break;
                        start = comma + 1;
                    }
                    if (v.size() != *dim) {
                        throw ParseError(line_no, value_col,
                                         "normal has " + std::to_string(v.size()) + " entries, expected " +
                                             std::to_string(*dim));
                    }
                    normal = std::move(v);
                } else if (key == "label") {
                    if (label) throw ParseError(line_no, tok.column, "duplicate 'label'");
                    label = parse_integer(value, line_no, value_col);
                    if (*label <= 0) throw ParseError(line_no, value_col, "label must be a positive integer");
                } else if (key == "offset") {
                    if (offset) throw ParseError(line_no, tok.column, "duplicate 'offset'");
                    try {
                        offset = parse_rational(value);
                    } catch (const Error&) {
                        throw ParseError(line_no, value_col, "expected a rational 'p/q' or integer, found '" + value + "'");
                    }
                } else {
                    throw ParseError(line_no, tok.column, "unknown facet key '" + key + "'");
                }
            }
            if (!normal) throw ParseError(line_no, head.column, "facet without 'normal'");
            if (!label) throw ParseError(line_no, head.column, "facet without 'label'");
            if (!offset) throw ParseError(line_no, head.column, "facet without 'offset'");
            p.normals.push_back(std::move(*normal));
            p.labels.push_back(std::move(*label));
            p.offsets.push_back(std::move(*offset));
        } else {
            throw ParseError(line_no, head.column, "unknown directive '" + head.text + "'");
        }
    }
    if (!dim) throw ParseError(line_no + 1, 1, "missing 'dimension'");
    if (p.normals.empty()) throw ParseError(line_no + 1, 1, "no facets");
    return p;
}

LabeledPolytope read_polytope_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("IOError", "cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_polytope(buf.str());
}

std::string write_polytope(const LabeledPolytope& p) {
    std::ostringstream out;
    out << "dimension " << p.dim << "\n";
    for (std::size_t i = 0; i < p.num_facets(); ++i) {
        out << "facet normal=";
        for (std::size_t c = 0; c < p.normals[i].size(); ++c) out << (c ? "," : "") << p.normals[i][c];
        out << " label=" << p.labels[i] << " offset=" << to_string(p.offsets[i]) << "\n";
    }
    return out.str();
}

namespace {

// Sums of terms "c * x1^e1 * ... [@ k]"; the sector suffix is required when
// parsing classes and rejected for plain polynomials.
class TermParser {
public:
    TermParser(const std::string& text, std::size_t num_vars) : text_(text), num_vars_(num_vars) {}

    template <typename Sink>
    void parse(bool with_sector, Sink&& sink) {
        skip_ws();
        if (pos_ == text_.size()) fail("empty expression");
        bool first = true;
        while (pos_ < text_.size()) {
            Integer sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
                skip_ws();
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            first = false;
            auto [coeff, mono] = product();
            std::size_t sector = 0;
            std::size_t sector_col = 0;
            if (with_sector) {
                expect('@');
                sector_col = pos_ + 1;
                Integer k = number();
                if (k > 1000000) throw ParseError(1, sector_col, "sector index " + k.str() + " out of range");
                sector = static_cast<std::size_t>(k);
            }
            sink(sign * coeff, std::move(mono), sector, sector_col);
            skip_ws();
        }
    }

private:
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(1, pos_ + 1, msg); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    void expect(char ch) {
        skip_ws();
        if (peek() != ch) fail(std::string("expected '") + ch + "'");
        ++pos_;
        skip_ws();
    }

    Integer number() {
        skip_ws();
        std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (start == pos_) fail("expected a number");
        Integer v(text_.substr(start, pos_ - start));
        skip_ws();
        return v;
    }

    std::pair<Integer, Monomial> product() {
        Integer coeff = 1;
        std::vector<unsigned> e(num_vars_, 0);
        for (;;) {
            skip_ws();
            if (peek() == 'x') {
                ++pos_;
                std::size_t col = pos_ + 1;
                Integer i = number();
                if (i < 1 || i > num_vars_) throw ParseError(1, col, "variable x" + i.str() + " out of range");
                unsigned exp = 1;
                if (peek() == '^') {
                    ++pos_;
                    Integer ev = number();
                    if (ev > 1000) fail("exponent too large");
                    exp = static_cast<unsigned>(ev);
                }
                e[static_cast<std::size_t>(i) - 1] += exp;
            } else if (std::isdigit(static_cast<unsigned char>(peek()))) {
                coeff *= number();
            } else {
                fail("expected a coefficient or a variable x<i>");
            }
            skip_ws();
            if (peek() != '*') break;
            ++pos_;
        }
        return {coeff, Monomial(std::move(e))};
    }

    const std::string& text_;
    std::size_t num_vars_;
    std::size_t pos_ = 0;
};

} // namespace

Polynomial parse_polynomial(const std::string& text, std::size_t num_vars) {
    Polynomial p(num_vars);
    TermParser(text, num_vars).parse(false, [&](const Integer& c, Monomial m, std::size_t, std::size_t) {
        p.add_term(m, c);
    });
    return p;
}

CRClass parse_class(const std::string& text, const ChenRuanRing& ring) {
    CRClass out = ring.zero();
    TermParser(text, ring.num_vars()).parse(true, [&](const Integer& c, Monomial m, std::size_t k, std::size_t col) {
        if (k >= ring.sectors().size()) {
            throw ParseError(1, col, "sector index " + std::to_string(k) + " out of range");
        }
        out = out + ring.make(k, Polynomial::monomial(m, c));
    });
    return out;
}

} // namespace toric::io
