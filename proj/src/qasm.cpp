#include "camel/qasm.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace camel {

namespace {

struct Token {
    std::string text;
    int line = 1, col = 1;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    // Tokens are identifiers, numbers, and single punctuation characters.
    Token next() {
        skip_ws();
        Token t;
        t.line = line_;
        t.col = col_;
        if (eof()) return t;  // empty text marks end of input
        char c = src_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (!eof() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
                              src_[pos_] == '_' || src_[pos_] == '.'))
                t.text += advance();
        } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == '-' || c == '+') {
            while (!eof() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
                              src_[pos_] == '.' || src_[pos_] == '-' || src_[pos_] == '+')) {
                // stop a number before punctuation like ')' or ','
                char d = src_[pos_];
                if ((d == '-' || d == '+') && !t.text.empty() &&
                    t.text.back() != 'e' && t.text.back() != 'E')
                    break;
                t.text += advance();
            }
        } else {
            t.text = advance();
        }
        return t;
    }

private:
    bool eof() const { return pos_ >= src_.size(); }

    char advance() {
        char c = src_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }

    void skip_ws() {
        while (!eof()) {
            char c = src_[pos_];
            if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else if (c == '/' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '/') {
                while (!eof() && src_[pos_] != '\n') advance();
            } else {
                break;
            }
        }
    }

    std::string_view src_;
    size_t pos_ = 0;
    int line_ = 1, col_ = 1;
};

class Parser {
public:
    explicit Parser(std::string_view src) : lex_(src) { bump(); }

    Circuit run() {
        if (cur_.text == "OPENQASM") {
            bump();  // version number
            expect_version();
            expect(";");
        }
        if (cur_.text != "qreg")
            fail("expected qreg declaration, got '" + cur_.text + "'");
        bump();
        reg_ = ident();
        expect("[");
        circuit_.num_qubits = integer();
        expect("]");
        expect(";");
        if (circuit_.num_qubits <= 0) fail("register size must be positive");

        while (!cur_.text.empty()) statement();
        return std::move(circuit_);
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw SyntaxError(cur_.line, cur_.col, msg);
    }

    void bump() { cur_ = lex_.next(); }

    void expect(const std::string& s) {
        if (cur_.text != s) fail("expected '" + s + "', got '" + cur_.text + "'");
        bump();
    }

    void expect_version() {
        if (cur_.text.empty()) fail("expected version number");
        bump();
    }

    std::string ident() {
        if (cur_.text.empty() || !std::isalpha(static_cast<unsigned char>(cur_.text[0])))
            fail("expected identifier, got '" + cur_.text + "'");
        std::string s = cur_.text;
        bump();
        return s;
    }

    int integer() {
        int v = 0;
        auto [p, ec] = std::from_chars(cur_.text.data(), cur_.text.data() + cur_.text.size(), v);
        if (ec != std::errc() || p != cur_.text.data() + cur_.text.size() || v < 0)
            fail("expected non-negative integer, got '" + cur_.text + "'");
        bump();
        return v;
    }

    double real() {
        std::string s = cur_.text;
        // allow a leading '-' token followed by the magnitude
        if (s == "-") {
            bump();
            s += cur_.text;
        }
        try {
            size_t used = 0;
            double v = std::stod(s, &used);
            if (used != s.size()) fail("bad number '" + s + "'");
            bump();
            return v;
        } catch (const std::exception&) {
            fail("bad number '" + s + "'");
        }
    }

    int qubit_ref() {
        std::string name = ident();
        if (name != reg_) fail("unknown register '" + name + "'");
        expect("[");
        int q = integer();
        expect("]");
        if (q >= circuit_.num_qubits)
            throw QubitOutOfRange("qubit q[" + std::to_string(q) + "] outside register of size " +
                                  std::to_string(circuit_.num_qubits));
        return q;
    }

    std::vector<int> qubit_list() {
        std::vector<int> qs{qubit_ref()};
        while (cur_.text == ",") {
            bump();
            qs.push_back(qubit_ref());
        }
        return qs;
    }

    void statement() {
        Token at = cur_;
        std::string name = ident();
        if (name == "x" || name == "h") {
            int q = qubit_ref();
            expect(";");
            circuit_.append(name == "x" ? GateKind::X : GateKind::H, {q});
        } else if (name == "rz") {
            expect("(");
            double theta = real();
            expect(")");
            int q = qubit_ref();
            expect(";");
            circuit_.append(GateKind::RZ, {q}, theta);
        } else if (name == "cz" || name == "swap") {
            int a = qubit_ref();
            expect(",");
            int b = qubit_ref();
            expect(";");
            if (a == b)
                throw SyntaxError(at.line, at.col, name + " operands must be distinct");
            circuit_.append(name == "cz" ? GateKind::CZ : GateKind::SWAP, {a, b});
        } else if (name == "barrier") {
            auto qs = qubit_list();
            expect(";");
            circuit_.append(GateKind::BARRIER, std::move(qs));
        } else if (name == "measure") {
            int q = qubit_ref();
            expect(";");
            circuit_.append(GateKind::MEASURE, {q});
        } else if (name == "qreg" || name == "creg" || name == "include") {
            throw SyntaxError(at.line, at.col, "'" + name + "' is not allowed here");
        } else {
            throw UnsupportedGate(name);
        }
        check_circuit(circuit_);
    }

    Lexer lex_;
    Token cur_;
    Circuit circuit_;
    std::string reg_;
};

std::string format_real(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace

Circuit parse_circuit(std::string_view text) {
    return Parser(text).run();
}

std::string emit_circuit(const Circuit& c, const std::string& reg_name) {
    std::ostringstream out;
    out << "OPENQASM 2.0;\n";
    out << "qreg " << reg_name << "[" << c.num_qubits << "];\n";
    auto q = [&](int i) { return reg_name + "[" + std::to_string(i) + "]"; };
    for (const Gate& g : c.gates) {
        switch (g.kind) {
            case GateKind::X: out << "x " << q(g.operands[0]); break;
            case GateKind::H: out << "h " << q(g.operands[0]); break;
            case GateKind::RZ:
                out << "rz(" << format_real(g.param.value_or(0.0)) << ") " << q(g.operands[0]);
                break;
            case GateKind::CZ: out << "cz " << q(g.operands[0]) << "," << q(g.operands[1]); break;
            case GateKind::SWAP:
                out << "swap " << q(g.operands[0]) << "," << q(g.operands[1]);
                break;
            case GateKind::BARRIER: {
                out << "barrier ";
                for (size_t i = 0; i < g.operands.size(); ++i)
                    out << (i ? "," : "") << q(g.operands[i]);
                break;
            }
            case GateKind::MEASURE: out << "measure " << q(g.operands[0]); break;
        }
        out << ";\n";
    }
    return out.str();
}

} // namespace camel
