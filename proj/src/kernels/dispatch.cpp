#include <atomic>
#include <cstdlib>
#include <string>
#include <vector>

#include "variants.hpp"

namespace huella::kernels {

namespace {

bool cpu_supports(Isa isa)
{
    switch (isa) {
    case Isa::scalar: return true;
    case Isa::avx2:
#if defined(HUELLA_HAVE_AVX2)
        return __builtin_cpu_supports("avx2");
#else
        return false;
#endif
    case Isa::neon:
#if defined(HUELLA_HAVE_NEON)
        return true;
#else
        return false;
#endif
    }
    return false;
}

const KernelTable* table_for(Isa isa)
{
    switch (isa) {
    case Isa::scalar: return &scalar::table;
#if defined(HUELLA_HAVE_AVX2)
    case Isa::avx2: return &avx2::table;
#endif
#if defined(HUELLA_HAVE_NEON)
    case Isa::neon: return &neon::table;
#endif
    default: return nullptr;
    }
}

std::vector<const KernelTable*> detect_available()
{
    std::vector<const KernelTable*> out;
    for (Isa isa : {Isa::scalar, Isa::avx2, Isa::neon}) {
        if (const KernelTable* t = table_for(isa); t && cpu_supports(isa)) out.push_back(t);
    }
    return out;
}

const std::vector<const KernelTable*>& available_tables()
{
    static const std::vector<const KernelTable*> tables = detect_available();
    return tables;
}

const KernelTable* initial_table()
{
    const auto& tables = available_tables();
    if (const char* forced = std::getenv("HUELLA_ISA")) {
        for (const KernelTable* t : tables) {
            if (name(t->isa) == forced) return t;
        }
    }
    return tables.back();
}

std::atomic<const KernelTable*>& current()
{
    static std::atomic<const KernelTable*> table{initial_table()};
    return table;
}

}  // namespace

std::string_view name(Isa isa)
{
    switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
    case Isa::neon: return "neon";
    }
    return "unknown";
}

const KernelTable& active() { return *current().load(std::memory_order_acquire); }

std::span<const KernelTable* const> available() { return available_tables(); }

const KernelTable& scalar_table() { return scalar::table; }

bool select(Isa isa)
{
    for (const KernelTable* t : available_tables()) {
        if (t->isa == isa) {
            current().store(t, std::memory_order_release);
            return true;
        }
    }
    return false;
}

}  // namespace huella::kernels
