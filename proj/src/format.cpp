#include "mcheck/format.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace mcheck {

namespace {

struct Token {
    std::string text;
    int column;  // 1-based
};

std::vector<Token> tokenize(const std::string& line) {
    std::vector<Token> out;
    std::size_t at = 0;
    while (at < line.size()) {
        if (std::isspace(static_cast<unsigned char>(line[at]))) {
            ++at;
            continue;
        }
        if (line[at] == '#') break;
        std::size_t end = at;
        while (end < line.size() && !std::isspace(static_cast<unsigned char>(line[end])) &&
               line[end] != '#')
            ++end;
        out.push_back(Token{line.substr(at, end - at), static_cast<int>(at) + 1});
        at = end;
    }
    return out;
}

int parse_int(const std::string& text, const std::string& source, int line, int column,
              const std::string& what) {
    std::size_t pos = 0;
    int value = 0;
    try {
        value = std::stoi(text, &pos);
    } catch (const std::exception&) {
        throw ParseError(source, line, column, "expected an integer for " + what + ", got '" + text + "'");
    }
    if (pos != text.size())
        throw ParseError(source, line, column, "trailing characters after " + what + " in '" + text + "'");
    return value;
}

Variable parse_variable(const Token& tok, const std::string& source, int line) {
    if (tok.text.size() < 2 || tok.text[0] != 'x')
        throw ParseError(source, line, tok.column,
                         "expected a variable token like x1, got '" + tok.text + "'");
    const int index = parse_int(tok.text.substr(1), source, line, tok.column, "variable index");
    if (index < 1)
        throw ParseError(source, line, tok.column, "variable index must be >= 1 in '" + tok.text + "'");
    return Variable{index};
}

struct Params {
    int n, m, m_prime, l, k;
};

Params parse_params(const std::vector<Token>& toks, const std::string& source, int line) {
    static const char* kKeys[5] = {"n", "m", "m'", "l", "k"};
    if (toks.size() != 6)
        throw ParseError(source, line, toks.front().column,
                         "params line needs exactly: params n=<int> m=<int> m'=<int> l=<int> k=<int>");
    int values[5];
    for (int t = 0; t < 5; ++t) {
        const Token& tok = toks[t + 1];
        const std::string key = std::string(kKeys[t]) + "=";
        if (tok.text.rfind(key, 0) != 0)
            throw ParseError(source, line, tok.column,
                             "expected " + key + "<int>, got '" + tok.text + "'");
        values[t] = parse_int(tok.text.substr(key.size()), source, line, tok.column,
                              std::string("parameter ") + kKeys[t]);
    }
    return Params{values[0], values[1], values[2], values[3], values[4]};
}

}  // namespace

ParseError::ParseError(std::string source, int line, int column, const std::string& message)
    : std::runtime_error(source + ":" + std::to_string(line) + ":" + std::to_string(column) +
                         ": " + message),
      source_(std::move(source)),
      line_(line),
      column_(column) {}

ExtendedMatrix parse_matrix(const std::string& text, const std::string& source_name) {
    std::istringstream in(text);
    return parse_matrix(in, source_name);
}

ExtendedMatrix parse_matrix(std::istream& in, const std::string& source_name) {
    MatrixData data;
    std::optional<Params> params;
    int params_line = 0;
    bool saw_row = false;

    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::vector<Token> toks = tokenize(line);
        if (toks.empty()) continue;

        if (toks.front().text == "params") {
            if (saw_row || params)
                throw ParseError(source_name, line_no, toks.front().column,
                                 "params line must come first and appear once");
            params = parse_params(toks, source_name, line_no);
            params_line = line_no;
            continue;
        }

        std::vector<Variable> left, right;
        bool after_bar = false;
        int bar_column = 0;
        for (const Token& tok : toks) {
            if (tok.text == "|") {
                if (after_bar)
                    throw ParseError(source_name, line_no, tok.column, "second '|' in a row");
                after_bar = true;
                bar_column = tok.column;
                continue;
            }
            (after_bar ? right : left).push_back(parse_variable(tok, source_name, line_no));
        }
        if (!after_bar)
            throw ParseError(source_name, line_no, toks.front().column,
                             "row has no '|' separating left and right parts");
        saw_row = true;
        if (!data.left.empty() && data.left.back().size() != left.size())
            throw ParseError(source_name, line_no, toks.front().column,
                             "ragged row: expected " + std::to_string(data.left.back().size()) +
                                 " left entries, got " + std::to_string(left.size()));
        if (!data.right.empty() && data.right.back().size() != right.size())
            throw ParseError(source_name, line_no, bar_column,
                             "ragged row: expected " + std::to_string(data.right.back().size()) +
                                 " right entries, got " + std::to_string(right.size()));
        data.left.push_back(std::move(left));
        data.right.push_back(std::move(right));
    }

    if (data.left.empty())
        throw ParseError(source_name, line_no ? line_no : 1, 1, "no matrix rows found");

    if (params) {
        if (params->n != static_cast<int>(data.left.size()))
            throw ParseError(source_name, params_line, 1,
                             "params declare n=" + std::to_string(params->n) + " but " +
                                 std::to_string(data.left.size()) + " rows follow");
        if (params->m != static_cast<int>(data.left.front().size()))
            throw ParseError(source_name, params_line, 1,
                             "params declare m=" + std::to_string(params->m) + " but rows have " +
                                 std::to_string(data.left.front().size()) + " left entries");
        if (params->m_prime != static_cast<int>(data.right.front().size()))
            throw ParseError(source_name, params_line, 1,
                             "params declare m'=" + std::to_string(params->m_prime) +
                                 " but rows have " + std::to_string(data.right.front().size()) +
                                 " right entries");
        data.left_var_bound = params->l;
        data.total_var_bound = params->k;
    }
    return validate(data);
}

ExtendedMatrix parse_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read file '" + path + "'");
    return parse_matrix(in, path);
}

std::string serialize(const ExtendedMatrix& m) {
    std::string out = "params n=" + std::to_string(m.rows()) + " m=" + std::to_string(m.left_cols()) +
                      " m'=" + std::to_string(m.right_cols()) + " l=" + std::to_string(m.left_var_bound()) +
                      " k=" + std::to_string(m.total_var_bound()) + "\n";
    for (int i = 0; i < m.rows(); ++i) {
        std::string row;
        for (int j = 0; j < m.left_cols(); ++j) {
            row += "x" + std::to_string(m.left(i, j).index);
            row += ' ';
        }
        row += '|';
        for (int j = 0; j < m.right_cols(); ++j) {
            row += " x" + std::to_string(m.right(i, j).index);
        }
        out += row;
        out += '\n';
    }
    return out;
}

}  // namespace mcheck
