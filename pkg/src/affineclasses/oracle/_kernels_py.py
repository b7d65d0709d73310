"""Pure-Python orbit kernels.

The compiled module _speedups mirrors these two functions exactly; the
dispatcher in kernels.py picks one implementation at import time.  Both
kernels partition an index range into orbits under a fixed list of maps and
return (orbit representatives, orbit sizes), representatives being the least
index of each orbit because indices are scanned in ascending order.
"""


def orbit_scan(t_flat, ngen, size):
    """Orbits of range(size) under ngen maps stored back to back in t_flat:
    map k sends e to t_flat[k*size + e]."""
    visited = bytearray(size)
    reps = []
    sizes = []
    offs = [k * size for k in range(ngen)]
    for e0 in range(size):
        if visited[e0]:
            continue
        visited[e0] = 1
        stack = [e0]
        cnt = 0
        while stack:
            e = stack.pop()
            cnt += 1
            for off in offs:
                e2 = t_flat[off + e]
                if not visited[e2]:
                    visited[e2] = 1
                    stack.append(e2)
        reps.append(e0)
        sizes.append(cnt)
    return reps, sizes


def affine_orbit_scan(cg_flat, om_flat, hv_flat, add_tab, ngen, mg, mv, stride):
    """Orbits of pairs e = gi*mv + vi under ngen conjugation maps.

    Map k sends (gi, vi) to (gi2, add_tab[om_flat[k*mg + gi2] + hv_flat[
    k*stride + vi]]) with gi2 = cg_flat[k*mg + gi]; om entries carry a
    factor mv so they index rows of the flat addition table directly.
    """
    size = mg * mv
    visited = bytearray(size)
    reps = []
    sizes = []
    gens = [(k * mg, k * stride) for k in range(ngen)]
    for e0 in range(size):
        if visited[e0]:
            continue
        visited[e0] = 1
        stack = [e0]
        cnt = 0
        while stack:
            e = stack.pop()
            cnt += 1
            gi, vi = divmod(e, mv)
            for goff, voff in gens:
                gi2 = cg_flat[goff + gi]
                vi2 = add_tab[om_flat[goff + gi2] + hv_flat[voff + vi]]
                e2 = gi2 * mv + vi2
                if not visited[e2]:
                    visited[e2] = 1
                    stack.append(e2)
        reps.append(e0)
        sizes.append(cnt)
    return reps, sizes
