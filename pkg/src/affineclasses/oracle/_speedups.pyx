# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled orbit kernels; see _kernels_py for the reference implementation
and the argument layout."""

from libc.stdlib cimport free, malloc
from libc.string cimport memset


def orbit_scan(const int[:] t_flat, Py_ssize_t ngen, Py_ssize_t size):
    cdef unsigned char *visited = <unsigned char *> malloc(size)
    cdef int *stack = <int *> malloc(size * sizeof(int))
    if visited == NULL or stack == NULL:
        free(visited)
        free(stack)
        raise MemoryError()
    memset(visited, 0, size)
    reps = []
    sizes = []
    cdef Py_ssize_t e0, k
    cdef int e, e2
    cdef Py_ssize_t sp
    cdef long cnt
    try:
        for e0 in range(size):
            if visited[e0]:
                continue
            visited[e0] = 1
            stack[0] = <int> e0
            sp = 1
            cnt = 0
            while sp:
                sp -= 1
                e = stack[sp]
                cnt += 1
                for k in range(ngen):
                    e2 = t_flat[k * size + e]
                    if not visited[e2]:
                        visited[e2] = 1
                        stack[sp] = e2
                        sp += 1
            reps.append(e0)
            sizes.append(cnt)
    finally:
        free(visited)
        free(stack)
    return reps, sizes


def affine_orbit_scan(const int[:] cg_flat, const int[:] om_flat,
                      const unsigned char[:] hv_flat,
                      const unsigned char[:] add_tab,
                      Py_ssize_t ngen, Py_ssize_t mg, Py_ssize_t mv,
                      Py_ssize_t stride):
    cdef Py_ssize_t size = mg * mv
    cdef unsigned char *visited = <unsigned char *> malloc(size)
    cdef int *stack = <int *> malloc(size * sizeof(int))
    if visited == NULL or stack == NULL:
        free(visited)
        free(stack)
        raise MemoryError()
    memset(visited, 0, size)
    reps = []
    sizes = []
    cdef Py_ssize_t e0, k
    cdef int e, e2, gi, vi, gi2, vi2
    cdef Py_ssize_t sp
    cdef long cnt
    try:
        for e0 in range(size):
            if visited[e0]:
                continue
            visited[e0] = 1
            stack[0] = <int> e0
            sp = 1
            cnt = 0
            while sp:
                sp -= 1
                e = stack[sp]
                cnt += 1
                gi = e / <int> mv
                vi = e % <int> mv
                for k in range(ngen):
                    gi2 = cg_flat[k * mg + gi]
                    vi2 = add_tab[om_flat[k * mg + gi2] + hv_flat[k * stride + vi]]
                    e2 = gi2 * <int> mv + vi2
                    if not visited[e2]:
                        visited[e2] = 1
                        stack[sp] = e2
                        sp += 1
            reps.append(e0)
            sizes.append(cnt)
    finally:
        free(visited)
        free(stack)
    return reps, sizes
