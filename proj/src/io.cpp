#include "singq/io.hpp"

#include <fstream>
#include <sstream>

namespace singq {

namespace {

// Token stream over the structure format: strips comments, tracks line
// numbers, splits on whitespace.
struct Tokens {
    std::vector<std::pair<std::string, int>> items;  // token, line
    size_t pos = 0;

    explicit Tokens(const std::string& text) {
        std::istringstream lines(text);
        std::string line;
        int lineno = 0;
        while (std::getline(lines, line)) {
            ++lineno;
            const auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            std::istringstream in(line);
            std::string tok;
            while (in >> tok) items.emplace_back(tok, lineno);
        }
    }

    bool done() const { return pos == items.size(); }
    int line() const {
        if (done()) return items.empty() ? 1 : items.back().second;
        return items[pos].second;
    }
    const std::string& peek() const { return items[pos].first; }
    std::string next(const char* what) {
        if (done()) throw ParseError(std::string("expected ") + what, line());
        return items[pos++].first;
    }

    int next_int(const char* what) {
        const int at = line();
        const std::string tok = next(what);
        try {
            size_t used = 0;
            const int v = std::stoi(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            return v;
        } catch (const std::exception&) {
            throw ParseError(std::string("expected ") + what + ", got '" +
                                     tok + "'", at);
        }
    }

    void expect(const std::string& tok, const char* what) {
        const int at = line();
        if (next(what) != tok)
            throw ParseError(std::string("expected ") + what, at);
    }
};

OpTable read_table(Tokens& t, int n, const char* label) {
    std::vector<int> cells;
    cells.reserve(static_cast<size_t>(n) * n);
    for (int i = 0; i < n * n; ++i) {
        const int at = t.line();
        const int v = t.next_int("table entry");
        if (v < 0 || v >= n)
            throw ParseError(std::string(label) + " entry " +
                                     std::to_string(v) + " outside 0.." +
                                     std::to_string(n - 1), at);
        cells.push_back(v);
    }
    return OpTable(n, std::move(cells));
}

int read_header_size(Tokens& t) {
    const int at = t.line();
    const std::string tok = t.next("n=<size>");
    if (tok.rfind("n=", 0) != 0) throw ParseError("expected n=<size>", at);
    try {
        size_t used = 0;
        const int n = std::stoi(tok.substr(2), &used);
        if (used != tok.size() - 2 || n < 1) throw std::invalid_argument(tok);
        return n;
    } catch (const std::exception&) {
        throw ParseError("expected a positive size after n=", at);
    }
}

}  // namespace

StructureTables parse_structure(const std::string& text) {
    Tokens t(text);
    const int at = t.line();
    const std::string kind = t.next("header ('quandle' or 'singquandle')");
    if (kind != "quandle" && kind != "singquandle")
        throw ParseError("expected header 'quandle' or 'singquandle', got '" +
                                 kind + "'", at);
    const int n = read_header_size(t);
    StructureTables out;
    t.expect("op:", "'op:'");
    out.op = read_table(t, n, "op");
    if (kind == "singquandle") {
        t.expect("r1:", "'r1:'");
        out.r1 = read_table(t, n, "r1");
        t.expect("r2:", "'r2:'");
        out.r2 = read_table(t, n, "r2");
    }
    if (!t.done())
        throw ParseError("trailing text '" + t.peek() + "'", t.line());
    return out;
}

namespace {

void append_table(std::ostringstream& out, const OpTable& t) {
    for (int x = 0; x < t.size(); ++x) {
        for (int y = 0; y < t.size(); ++y) {
            if (y) out << ' ';
            out << t.at(x, y);
        }
        out << '\n';
    }
}

}  // namespace

std::string format_structure(const StructureTables& t) {
    std::ostringstream out;
    out << (t.is_singquandle() ? "singquandle" : "quandle") << " n="
        << t.op.size() << '\n';
    out << "op:\n";
    append_table(out, t.op);
    if (t.is_singquandle()) {
        out << "r1:\n";
        append_table(out, *t.r1);
        out << "r2:\n";
        append_table(out, *t.r2);
    }
    return out.str();
}

std::string format_quandle(const Quandle& q) {
    StructureTables t;
    t.op = q.op();
    return format_structure(t);
}

std::string format_singquandle(const OrientedSingquandle& s) {
    StructureTables t;
    t.op = s.op();
    t.r1 = s.r1();
    t.r2 = s.r2();
    return format_structure(t);
}

Quandle parse_quandle(const std::string& text) {
    return Quandle::from_table(parse_structure(text).op);
}

OrientedSingquandle parse_singquandle(const std::string& text) {
    StructureTables t = parse_structure(text);
    if (!t.is_singquandle())
        throw ParseError("file declares a quandle, not a singquandle", 1);
    return OrientedSingquandle(Quandle::from_table(std::move(t.op)),
                               std::move(*t.r1), std::move(*t.r2));
}

FiniteGroup parse_group(const std::string& text) {
    Tokens t(text);
    const int at = t.line();
    if (t.next("header 'group'") != "group")
        throw ParseError("expected header 'group'", at);
    const int n = read_header_size(t);
    t.expect("mul:", "'mul:'");
    OpTable mul = read_table(t, n, "mul");
    if (!t.done())
        throw ParseError("trailing text '" + t.peek() + "'", t.line());
    return FiniteGroup::from_table(std::move(mul));
}

std::string format_group(const FiniteGroup& g) {
    std::ostringstream out;
    out << "group n=" << g.order() << '\n' << "mul:\n";
    append_table(out, g.table());
    return out.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "' for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw Error("failed while reading '" + path + "'");
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open '" + path + "' for writing");
    out << content;
    out.flush();
    if (!out) throw Error("failed while writing '" + path + "'");
}

}  // namespace singq
