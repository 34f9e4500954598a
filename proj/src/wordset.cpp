#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "dhj/point_set.hpp"

namespace dhj {

namespace {

std::string strip(const std::string& s)
{
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos)
        return {};
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

int parse_header_field(const std::string& token, const char* name)
{
    std::string prefix = std::string(name) + "=";
    if (token.rfind(prefix, 0) != 0)
        throw std::invalid_argument("wordset header: expected " + prefix + "<int>, got '" + token + "'");
    std::size_t used = 0;
    int v = std::stoi(token.substr(prefix.size()), &used);
    if (used != token.size() - prefix.size())
        throw std::invalid_argument("wordset header: bad value in '" + token + "'");
    return v;
}

} // namespace

PointSet read_wordset(std::istream& in)
{
    std::string line;
    int lineno = 0;
    int k = 0, n = 0;
    bool have_header = false;
    PointSet* set = nullptr;
    PointSet storage(2, 1);

    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        line = strip(line);
        if (line.empty())
            continue;
        if (!have_header) {
            std::istringstream hs(line);
            std::string tk, tn, extra;
            if (!(hs >> tk >> tn) || (hs >> extra))
                throw std::invalid_argument("wordset line " + std::to_string(lineno) + ": expected header 'k=<k> n=<n>'");
            k = parse_header_field(tk, "k");
            n = parse_header_field(tn, "n");
            storage = PointSet(k, n);
            set = &storage;
            have_header = true;
            continue;
        }
        Word w = [&] {
            try {
                return parse_word(k, line);
            } catch (const std::exception& e) {
                throw std::invalid_argument("wordset line " + std::to_string(lineno) + ": " + e.what());
            }
        }();
        if (w.length() != n)
            throw std::invalid_argument("wordset line " + std::to_string(lineno) + ": word '" + line +
                                        "' has length " + std::to_string(w.length()) + ", header says n=" +
                                        std::to_string(n));
        if (set->contains(w.index()))
            throw std::invalid_argument("wordset line " + std::to_string(lineno) + ": duplicate word '" + line + "'");
        set->insert(w.index());
    }
    if (!have_header)
        throw std::invalid_argument("wordset: missing 'k=<k> n=<n>' header");
    return storage;
}

void write_wordset(std::ostream& out, const PointSet& a)
{
    out << "# wordset v1\n";
    out << "k=" << a.k() << " n=" << a.n() << "\n";
    a.for_each([&](Index i) { out << to_string(Word::from_index(a.k(), a.n(), i)) << "\n"; });
}

PointSet load_wordset(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open wordset file: " + path);
    return read_wordset(in);
}

void save_wordset(const std::string& path, const PointSet& a)
{
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write wordset file: " + path);
    write_wordset(out, a);
}

} // namespace dhj
