#include "symrect/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <vector>

namespace symrect {

namespace {

std::string lowercase(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    return s;
}

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
            i++;
        const auto start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])))
            i++;
        if (i > start)
            out.push_back(line.substr(start, i - start));
    }
    return out;
}

std::int64_t parse_int(std::string_view tok, std::size_t line_no) {
    std::int64_t v = 0;
    const auto *end = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(tok.data(), end, v);
    if (ec != std::errc() || ptr != end)
        throw ParseError("expected an integer, got '" + std::string(tok) + "'", line_no);
    return v;
}

using EntryList = std::vector<std::pair<vid_t, vid_t>>;

SparseMatrix finish(vid_t n, EntryList entries, const LoadOptions &options) {
    if (options.drop_self_loops)
        std::erase_if(entries, [](const auto &e) { return e.first == e.second; });
    if (options.symmetrize) {
        const auto m = entries.size();
        entries.reserve(2 * m);
        for (std::size_t k = 0; k < m; k++)
            entries.emplace_back(entries[k].second, entries[k].first);
    }
    return SparseMatrix::from_entries(n, std::move(entries));
}

SparseMatrix load_matrix_market(std::istream &in, const LoadOptions &options) {
    std::string line;
    std::size_t line_no = 0;
    if (!std::getline(in, line))
        throw ParseError("empty input", 0);
    line_no++;
    const auto header = split_ws(line);
    if (header.size() < 5 || lowercase(std::string(header[0])) != "%%matrixmarket")
        throw ParseError("missing %%MatrixMarket header", line_no);
    const auto object = lowercase(std::string(header[1]));
    const auto layout = lowercase(std::string(header[2]));
    const auto field = lowercase(std::string(header[3]));
    const auto symmetry = lowercase(std::string(header[4]));
    if (object != "matrix" || layout != "coordinate")
        throw ParseError("only 'matrix coordinate' files are supported", line_no);
    std::size_t value_tokens = 0;
    if (field == "pattern")
        value_tokens = 0;
    else if (field == "real" || field == "integer")
        value_tokens = 1;
    else if (field == "complex")
        value_tokens = 2;
    else
        throw ParseError("unsupported field '" + field + "'", line_no);
    bool mirror = false;
    if (symmetry == "symmetric" || symmetry == "skew-symmetric" || symmetry == "hermitian")
        mirror = true;
    else if (symmetry != "general")
        throw ParseError("unsupported symmetry '" + symmetry + "'", line_no);

    std::int64_t rows = -1, cols = -1, declared = -1;
    while (std::getline(in, line)) {
        line_no++;
        const auto toks = split_ws(line);
        if (toks.empty() || toks[0].front() == '%')
            continue;
        if (toks.size() != 3)
            throw ParseError("size line must be 'rows cols entries'", line_no);
        rows = parse_int(toks[0], line_no);
        cols = parse_int(toks[1], line_no);
        declared = parse_int(toks[2], line_no);
        break;
    }
    if (declared < 0)
        throw ParseError("missing size line", line_no);
    if (rows < 0 || cols < 0 || std::max(rows, cols) > std::numeric_limits<vid_t>::max())
        throw ParseError("invalid dimensions", line_no);
    if (rows != cols && !options.symmetrize)
        throw DimensionError("matrix is " + std::to_string(rows) + "x" + std::to_string(cols) +
                             "; pass symmetrize to embed it in a square matrix");
    const auto n = static_cast<vid_t>(std::max(rows, cols));

    EntryList entries;
    entries.reserve(static_cast<std::size_t>(mirror ? 2 * declared : declared));
    std::int64_t seen = 0;
    while (seen < declared && std::getline(in, line)) {
        line_no++;
        const auto toks = split_ws(line);
        if (toks.empty() || toks[0].front() == '%')
            continue;
        if (toks.size() < 2 + value_tokens)
            throw ParseError("entry needs " + std::to_string(2 + value_tokens) + " fields", line_no);
        const auto r = parse_int(toks[0], line_no);
        const auto c = parse_int(toks[1], line_no);
        if (r < 1 || r > rows || c < 1 || c > cols)
            throw ParseError("entry (" + std::to_string(r) + "," + std::to_string(c) + ") out of range", line_no);
        entries.emplace_back(static_cast<vid_t>(r - 1), static_cast<vid_t>(c - 1));
        if (mirror && r != c)
            entries.emplace_back(static_cast<vid_t>(c - 1), static_cast<vid_t>(r - 1));
        seen++;
    }
    if (seen < declared)
        throw ParseError("expected " + std::to_string(declared) + " entries, found " + std::to_string(seen),
                         line_no + 1);
    return finish(n, std::move(entries), options);
}

SparseMatrix load_edge_list(std::istream &in, const LoadOptions &options) {
    std::string line;
    std::size_t line_no = 0;
    std::vector<std::pair<std::int64_t, std::int64_t>> raw;
    std::int64_t max_id = -1;
    std::int64_t declared_n = 0;
    while (std::getline(in, line)) {
        line_no++;
        std::string_view view(line);
        if (const auto hash = view.find('#'); hash != std::string_view::npos) {
            // "# n N" (as written by write_matrix) declares the vertex count.
            const auto note = split_ws(view.substr(hash + 1));
            std::int64_t v = 0;
            if (note.size() == 2 && note[0] == "n" &&
                std::from_chars(note[1].data(), note[1].data() + note[1].size(), v).ptr ==
                    note[1].data() + note[1].size())
                declared_n = std::max(declared_n, v);
            view = view.substr(0, hash);
        }
        const auto toks = split_ws(view);
        if (toks.empty())
            continue;
        if (toks.size() < 2)
            throw ParseError("expected 'u v'", line_no);
        const auto u = parse_int(toks[0], line_no);
        const auto v = parse_int(toks[1], line_no);
        if (u < 0 || v < 0)
            throw ParseError("vertex ids must be non-negative", line_no);
        raw.emplace_back(u, v);
        max_id = std::max({max_id, u, v});
    }

    EntryList entries;
    entries.reserve(raw.size());
    vid_t n = 0;
    if (options.compact_ids) {
        std::vector<std::int64_t> ids;
        ids.reserve(raw.size() * 2);
        for (const auto &[u, v] : raw) {
            ids.push_back(u);
            ids.push_back(v);
        }
        std::sort(ids.begin(), ids.end());
        ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
        if (ids.size() > static_cast<std::size_t>(std::numeric_limits<vid_t>::max()))
            throw ParseError("too many vertices", 0);
        auto relabel = [&](std::int64_t id) {
            return static_cast<vid_t>(std::lower_bound(ids.begin(), ids.end(), id) - ids.begin());
        };
        for (const auto &[u, v] : raw)
            entries.emplace_back(relabel(u), relabel(v));
        n = static_cast<vid_t>(ids.size());
    } else {
        if (std::max(max_id, declared_n - 1) >= std::numeric_limits<vid_t>::max())
            throw ParseError("vertex id " + std::to_string(max_id) + " too large; try compact_ids", 0);
        for (const auto &[u, v] : raw)
            entries.emplace_back(static_cast<vid_t>(u), static_cast<vid_t>(v));
        n = static_cast<vid_t>(std::max(max_id + 1, declared_n));
    }
    return finish(n, std::move(entries), options);
}

} // namespace

MatrixFormat format_from_name(std::string_view name) {
    if (name == "mtx" || name == "matrix-market")
        return MatrixFormat::matrix_market;
    if (name == "edges" || name == "edge-list")
        return MatrixFormat::edge_list;
    throw std::invalid_argument("unknown matrix format '" + std::string(name) + "'");
}

std::string_view to_string(MatrixFormat f) { return f == MatrixFormat::matrix_market ? "mtx" : "edges"; }

SparseMatrix load_matrix(std::istream &in, MatrixFormat format, const LoadOptions &options) {
    return format == MatrixFormat::matrix_market ? load_matrix_market(in, options) : load_edge_list(in, options);
}

SparseMatrix load_matrix(std::string_view text, MatrixFormat format, const LoadOptions &options) {
    std::istringstream in{std::string(text)};
    return load_matrix(in, format, options);
}

SparseMatrix load_matrix_file(const std::filesystem::path &path, MatrixFormat format, const LoadOptions &options) {
    std::ifstream in(path);
    if (!in)
        throw Error("cannot open " + path.string());
    return load_matrix(in, format, options);
}

void write_matrix(std::ostream &out, const SparseMatrix &A, MatrixFormat format) {
    if (format == MatrixFormat::matrix_market) {
        out << "%%MatrixMarket matrix coordinate pattern general\n";
        out << A.n() << ' ' << A.n() << ' ' << A.nnz() << '\n';
        for (vid_t i = 0; i < A.n(); i++)
            for (auto c : A.row(i))
                out << i + 1 << ' ' << c + 1 << '\n';
    } else {
        // Trailing isolated vertices are only recoverable through the "# n" line.
        out << "# n " << A.n() << '\n';
        for (vid_t i = 0; i < A.n(); i++)
            for (auto c : A.row(i))
                out << i << ' ' << c << '\n';
    }
}

std::uint64_t fnv1a64(std::string_view bytes) noexcept {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

std::string read_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace symrect
