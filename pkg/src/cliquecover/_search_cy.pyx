# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled twin of _search_py: identical contract, C-speed inner loop.

See _search_py for the algorithm; the two kernels must stay byte-equivalent
in results (the differential tests enforce it)."""

from libc.math cimport fabs, floor, sqrt
from libc.stdint cimport uint64_t
from libc.stdlib cimport free, malloc

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil

NAME = "cython"


cdef class _Search:
    cdef int m, k, ncl, omega
    cdef long max_edges_per_clique
    cdef int* sizes
    cdef uint64_t* masks
    cdef int* cflat
    cdef int* coff
    cdef int* chosen
    cdef int n_chosen
    cdef int* scratch        # per-depth candidate rows, (k+1) * ncl
    cdef double* skeys       # matching sort keys
    cdef long best_sum
    cdef object best_cover
    cdef list verts

    def __cinit__(self, int m, int k, list sizes, list masks, list verts,
                  list cand_by_edge, int omega):
        cdef int i, j, pos
        self.m = m
        self.k = k
        self.omega = omega
        self.ncl = len(sizes)
        self.max_edges_per_clique = <long> omega * (omega - 1) // 2
        self.verts = verts
        self.best_sum = -1
        self.best_cover = None
        self.n_chosen = 0
        self.sizes = <int*> malloc(self.ncl * sizeof(int))
        self.masks = <uint64_t*> malloc(self.ncl * sizeof(uint64_t))
        self.cflat = <int*> malloc(max(self.ncl, 1) * sizeof(int))
        self.coff = <int*> malloc((m + 1) * sizeof(int))
        self.chosen = <int*> malloc(max(k, 1) * sizeof(int))
        self.scratch = <int*> malloc((k + 1) * max(self.ncl, 1) * sizeof(int))
        self.skeys = <double*> malloc((k + 1) * max(self.ncl, 1) * sizeof(double))
        if (self.sizes == NULL or self.masks == NULL or self.cflat == NULL or
                self.coff == NULL or self.chosen == NULL or
                self.scratch == NULL or self.skeys == NULL):
            raise MemoryError()
        for i in range(self.ncl):
            self.sizes[i] = sizes[i]
            self.masks[i] = masks[i]
        pos = 0
        for i in range(m):
            self.coff[i] = pos
            for j in cand_by_edge[i]:
                self.cflat[pos] = j
                pos += 1
        self.coff[m] = pos

    def __dealloc__(self):
        free(self.sizes)
        free(self.masks)
        free(self.cflat)
        free(self.coff)
        free(self.chosen)
        free(self.scratch)
        free(self.skeys)

    cdef object _canonical(self, int slots_left):
        cdef int i
        cover = [self.verts[self.chosen[i]] for i in range(self.n_chosen)]
        cover.extend([(0,)] * slots_left)
        cover.sort()
        return tuple(cover)

    cdef void _recurse(self, uint64_t uncovered, int slots_left, long cur_sum):
        cdef long total, r
        cdef int e, depth, count, i, j, c
        cdef double ideal, ceiling, key
        cdef int* row
        cdef double* keys
        if uncovered == 0:
            total = cur_sum + slots_left
            if total > self.best_sum:
                self.best_sum = total
                self.best_cover = self._canonical(slots_left)
            elif total == self.best_sum:
                cand = self._canonical(slots_left)
                if cand < self.best_cover:
                    self.best_cover = cand
            return
        if slots_left == 0:
            return
        r = __builtin_popcountll(uncovered)
        if slots_left * self.max_edges_per_clique < r:
            return
        ideal = 0.5 * (1.0 + sqrt(1.0 + 8.0 * <double> r / slots_left))
        if self.best_sum >= 0:
            ceiling = ideal
            if self.omega < ceiling:
                ceiling = self.omega
            ceiling = cur_sum + slots_left * ceiling
            if <long> floor(ceiling + 1e-9) < self.best_sum:
                return
        e = __builtin_ctzll(uncovered)
        depth = self.k - slots_left
        row = self.scratch + depth * self.ncl
        keys = self.skeys + depth * self.ncl
        count = 0
        for i in range(self.coff[e], self.coff[e + 1]):
            c = self.cflat[i]
            if self.masks[c] & ~uncovered == 0:
                # insertion sort by (|size - ideal|, size, id)
                key = fabs(self.sizes[c] - ideal)
                j = count
                while j > 0 and (keys[j - 1] > key or
                                 (keys[j - 1] == key and
                                  (self.sizes[row[j - 1]] > self.sizes[c] or
                                   (self.sizes[row[j - 1]] == self.sizes[c] and
                                    row[j - 1] > c)))):
                    row[j] = row[j - 1]
                    keys[j] = keys[j - 1]
                    j -= 1
                row[j] = c
                keys[j] = key
                count += 1
        for i in range(count):
            c = row[i]
            self.chosen[self.n_chosen] = c
            self.n_chosen += 1
            self._recurse(uncovered & ~self.masks[c], slots_left - 1,
                          cur_sum + self.sizes[c])
            self.n_chosen -= 1


def search(m, k, sizes, masks, verts, cand_by_edge, omega):
    """Exact maximum vertex sum over partitions of m edges into <= k cliques.

    Same contract as _search_py.search; edge masks must fit in 64 bits.
    """
    if m > 62:
        raise ValueError(f"compiled kernel handles at most 62 edges, got {m}")
    cdef _Search s = _Search(m, k, list(sizes), list(masks), list(verts),
                             list(cand_by_edge), omega)
    s._recurse((<uint64_t> 1 << m) - 1, k, 0)
    if s.best_sum < 0:
        return False, None, None
    return True, s.best_sum, s.best_cover
