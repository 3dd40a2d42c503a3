#include "singq/diagram.hpp"

#include <map>
#include <sstream>

namespace singq {

DiagramReport validate_diagram(const SingularDiagram& d) {
    DiagramReport rep;
    auto issue = [&rep](std::string msg) {
        rep.ok = false;
        rep.issues.push_back(std::move(msg));
    };

    const int s = d.semiarc_count;
    if (s < 0) issue("semiarc count is negative");
    if (s == 0 && !d.crossings.empty())
        issue("crossings present but the semiarc count is zero");

    std::vector<int> as_input(static_cast<size_t>(s < 0 ? 0 : s), 0);
    std::vector<int> as_output(as_input.size(), 0);
    for (size_t i = 0; i < d.crossings.size(); ++i) {
        const CrossingRecord& c = d.crossings[i];
        const std::string where = "crossing " + std::to_string(i + 1);
        bool in_range = true;
        for (int p : c.ports)
            if (p < 1 || p > s) {
                issue(where + ": port label " + std::to_string(p) +
                      " outside 1.." + std::to_string(s));
                in_range = false;
            }
        if (!in_range) continue;
        if (c.in0() == c.in1())
            issue(where + ": both inputs carry the same semiarc");
        if (c.out0() == c.out1())
            issue(where + ": both outputs carry the same semiarc");
        as_input[static_cast<size_t>(c.in0() - 1)]++;
        as_input[static_cast<size_t>(c.in1() - 1)]++;
        as_output[static_cast<size_t>(c.out0() - 1)]++;
        as_output[static_cast<size_t>(c.out1() - 1)]++;
    }
    for (int a = 1; a <= s; ++a) {
        const int in = as_input[static_cast<size_t>(a - 1)];
        const int out = as_output[static_cast<size_t>(a - 1)];
        if (in != 1)
            issue("semiarc " + std::to_string(a) + " enters " +
                  std::to_string(in) + " crossings (want exactly 1)");
        if (out != 1)
            issue("semiarc " + std::to_string(a) + " leaves " +
                  std::to_string(out) + " crossings (want exactly 1)");
    }
    return rep;
}

SingularDiagram parse_diagram(const std::string& text) {
    SingularDiagram d;
    std::map<long long, int> relabel;  // input label -> 1..S by first appearance
    std::istringstream lines(text);
    std::string line;
    int lineno = 0;
    while (std::getline(lines, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream in(line);
        std::string kind;
        if (!(in >> kind)) continue;  // blank line

        CrossingRecord c;
        if (kind == "P") c.kind = CrossingKind::Positive;
        else if (kind == "N") c.kind = CrossingKind::Negative;
        else if (kind == "S") c.kind = CrossingKind::Singular;
        else
            throw ParseError("unknown crossing kind '" + kind +
                                         "' (expected P, N or S)", lineno);

        for (int i = 0; i < 4; ++i) {
            long long label;
            if (!(in >> label))
                throw ParseError("expected 4 semiarc labels after '" +
                                             kind + "'", lineno);
            if (label < 1)
                throw ParseError("semiarc labels must be positive", lineno);
            auto [it, fresh] = relabel.try_emplace(label, 0);
            if (fresh) it->second = static_cast<int>(relabel.size());
            c.ports[static_cast<size_t>(i)] = it->second;
        }
        std::string extra;
        if (in >> extra)
            throw ParseError("trailing text '" + extra + "'", lineno);
        d.crossings.push_back(c);
    }
    d.semiarc_count = static_cast<int>(relabel.size());

    DiagramReport rep = validate_diagram(d);
    if (!rep.ok) {
        std::string msg = "not a closed diagram";
        for (const std::string& s : rep.issues) msg += "; " + s;
        throw ParseError(msg, lineno == 0 ? 1 : lineno);
    }
    return d;
}

std::string serialize_diagram(const SingularDiagram& d) {
    std::ostringstream out;
    for (const CrossingRecord& c : d.crossings) {
        switch (c.kind) {
            case CrossingKind::Positive: out << 'P'; break;
            case CrossingKind::Negative: out << 'N'; break;
            case CrossingKind::Singular: out << 'S'; break;
        }
        for (int p : c.ports) out << ' ' << p;
        out << '\n';
    }
    return out.str();
}

}  // namespace singq
