#include "symcube/io.hpp"

#include <cctype>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace symcube {

ParseError::ParseError(std::string message, int line_, int column_)
    : std::runtime_error(line_ > 0 ? "line " + std::to_string(line_) + ", column " +
                                         std::to_string(column_) + ": " + message
                                   : message),
      line(line_),
      column(column_) {}

namespace {

// Whitespace-tolerant tokenizer that remembers where each token started.
class TokenReader {
  public:
    explicit TokenReader(std::istream& in) : in_(in) {}

    bool next(std::string& token, int& line, int& column) {
        token.clear();
        int c;
        while ((c = in_.get()) != EOF) {
            advance(c);
            if (!std::isspace(c)) break;
        }
        if (c == EOF) return false;
        line = line_;
        column = column_;
        token.push_back(static_cast<char>(c));
        while ((c = in_.peek()) != EOF && !std::isspace(c)) {
            token.push_back(static_cast<char>(in_.get()));
            ++column_;
        }
        return true;
    }

    int line() const { return line_; }
    int column() const { return column_; }

  private:
    void advance(int c) {
        if (c == '\n') {
            ++line_;
            column_ = 0;
        } else {
            ++column_;
        }
    }

    std::istream& in_;
    int line_ = 1;
    int column_ = 0;
};

int parse_int(const std::string& token, int line, int column, const char* what) {
    std::size_t used = 0;
    int value = 0;
    try {
        value = std::stoi(token, &used);
    } catch (const std::exception&) {
        throw ParseError(std::string("expected ") + what + ", got '" + token + "'", line, column);
    }
    if (used != token.size())
        throw ParseError(std::string("expected ") + what + ", got '" + token + "'", line, column);
    return value;
}

}  // namespace

LatinCube read_cube_grid(std::istream& in) {
    TokenReader reader(in);
    std::string token;
    int line = 0, column = 0;

    if (!reader.next(token, line, column)) throw ParseError("empty input", 1, 1);
    if (token != "order")
        throw ParseError("expected header 'order N', got '" + token + "'", line, column);
    if (!reader.next(token, line, column)) throw ParseError("missing order value", line, column);
    const int n = parse_int(token, line, column, "the order");
    if (n < 1) throw ParseError("order must be >= 1", line, column);

    const auto total = static_cast<std::size_t>(n) * n * n;
    std::vector<int> cells(total, 0);
    // Tokens arrive layer by layer, each layer row-major.
    for (std::size_t k = 0; k < total; ++k) {
        if (!reader.next(token, line, column))
            throw ParseError("expected " + std::to_string(total) + " symbols, got " +
                                 std::to_string(k),
                             reader.line(), reader.column() + 1);
        const int symbol = parse_int(token, line, column, "a symbol");
        if (symbol < 1 || symbol > n * n)
            throw ParseError("symbol " + std::to_string(symbol) + " outside 1.." +
                                 std::to_string(n * n),
                             line, column);
        const auto l = k / (static_cast<std::size_t>(n) * n);
        const auto i = k / static_cast<std::size_t>(n) % static_cast<std::size_t>(n);
        const auto j = k % static_cast<std::size_t>(n);
        cells[(i * static_cast<std::size_t>(n) + j) * static_cast<std::size_t>(n) + l] = symbol;
    }
    if (reader.next(token, line, column))
        throw ParseError("unexpected trailing token '" + token + "'", line, column);
    return LatinCube(n, std::move(cells));
}

void write_cube_grid(std::ostream& out, const LatinCube& cube) {
    const int n = cube.order();
    out << "order " << n << "\n";
    for (int l = 1; l <= n; ++l) {
        out << "\n";
        for (int i = 1; i <= n; ++i) {
            for (int j = 1; j <= n; ++j) {
                if (j > 1) out << ' ';
                out << cube.at(i, j, l);
            }
            out << "\n";
        }
    }
}

LatinCube read_cube_json(std::istream& in) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& err) {
        throw ParseError(err.what(), 0, 0);
    }
    try {
        if (!doc.is_object()) throw ParseError("top level must be an object", 0, 0);
        const int n = doc.at("order").get<int>();
        if (n < 1) throw ParseError("order must be >= 1", 0, 0);
        if (doc.contains("symbols") && doc.at("symbols").get<long long>() !=
                                           static_cast<long long>(n) * n)
            throw ParseError("'symbols' must equal order^2", 0, 0);
        const auto& rows = doc.at("cells");
        if (!rows.is_array() || rows.size() != static_cast<std::size_t>(n))
            throw ParseError("'cells' must be an order-sized array", 0, 0);
        std::vector<int> cells;
        cells.reserve(static_cast<std::size_t>(n) * n * n);
        for (const auto& row : rows) {
            if (!row.is_array() || row.size() != static_cast<std::size_t>(n))
                throw ParseError("'cells' rows must be order-sized arrays", 0, 0);
            for (const auto& pile : row) {
                if (!pile.is_array() || pile.size() != static_cast<std::size_t>(n))
                    throw ParseError("'cells' columns must be order-sized arrays", 0, 0);
                for (const auto& value : pile) {
                    if (!value.is_number_integer())
                        throw ParseError("cell symbols must be integers", 0, 0);
                    const long long symbol = value.get<long long>();
                    if (symbol < 1 || symbol > static_cast<long long>(n) * n)
                        throw ParseError("symbol " + std::to_string(symbol) + " outside 1.." +
                                             std::to_string(static_cast<long long>(n) * n),
                                         0, 0);
                    cells.push_back(static_cast<int>(symbol));
                }
            }
        }
        return LatinCube(n, std::move(cells));
    } catch (const nlohmann::json::exception& err) {
        throw ParseError(err.what(), 0, 0);
    }
}

void write_cube_json(std::ostream& out, const LatinCube& cube) {
    const int n = cube.order();
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (int i = 1; i <= n; ++i) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (int j = 1; j <= n; ++j) {
            nlohmann::ordered_json pile = nlohmann::ordered_json::array();
            for (int l = 1; l <= n; ++l) pile.push_back(cube.at(i, j, l));
            row.push_back(std::move(pile));
        }
        rows.push_back(std::move(row));
    }
    nlohmann::ordered_json doc;
    doc["order"] = n;
    doc["cells"] = std::move(rows);
    doc["symbols"] = n * n;
    out << doc.dump() << "\n";
}

LatinCube read_cube_auto(std::istream& in) {
    int c;
    while ((c = in.peek()) != EOF && std::isspace(c)) in.get();
    if (c == EOF) throw ParseError("empty input", 1, 1);
    if (c == '{') return read_cube_json(in);
    return read_cube_grid(in);
}

std::string cube_to_string(const LatinCube& cube, const std::string& format) {
    std::ostringstream out;
    if (format == "grid")
        write_cube_grid(out, cube);
    else if (format == "json")
        write_cube_json(out, cube);
    else
        throw std::invalid_argument("unknown format '" + format + "'");
    return out.str();
}

}  // namespace symcube
