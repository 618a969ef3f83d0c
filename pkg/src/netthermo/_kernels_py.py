"""Pure-Python Metropolis kernel; reference for the compiled one."""

KERNEL_NAME = "python"


def advance(state, k1, k2, total, u_dir, u_acc, out):
    """Run ``len(u_dir)`` chain steps from ``state``, writing each state to ``out``.

    Returns the final state and the number of accepted moves.
    """
    n = len(u_dir)
    if len(u_acc) != n or len(out) != n:
        raise ValueError("u_dir, u_acc and out must have equal length")
    accepted = 0
    trace = [0] * n
    for i, (d, a) in enumerate(zip(u_dir.tolist(), u_acc.tolist())):
        if d < 0.5:
            if state < total:
                ratio = ((state + k1) / (state + 1.0)) * (
                    (total - state) / (total - state - 1.0 + k2)
                )
                if a < ratio:
                    state += 1
                    accepted += 1
        elif state > 0:
            ratio = (state / (state - 1.0 + k1)) * (
                (total - state + k2) / (total - state + 1.0)
            )
            if a < ratio:
                state -= 1
                accepted += 1
        trace[i] = state
    out[:] = trace
    return state, accepted
