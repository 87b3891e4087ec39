"""Deep recursions without the interpreter stack."""


def drive(root, visit):
    """Run a generator-based recursion on an explicit stack.

    A frame yields ``args`` to request ``visit(*args)`` and receives its result.
    """
    stack = [root]
    value = None
    while stack:
        try:
            request = stack[-1].send(value)
        except StopIteration as done:
            stack.pop()
            value = done.value
            continue
        stack.append(visit(*request))
        value = None
    return value
