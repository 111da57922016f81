"""Runtime function values."""


class Function:
    """A curried function value; applying fewer arguments than its arity
    yields another Function."""

    def __init__(self, name, fn, arity, args=()):
        self.name = name
        self.fn = fn
        self.arity = arity
        self.args = tuple(args)

    def apply(self, args):
        args = self.args + tuple(args)
        if len(args) < self.arity:
            return Function(self.name, self.fn, self.arity, args)
        result = self.fn(*args[: self.arity])
        rest = args[self.arity :]
        if rest:
            if not isinstance(result, Function):
                raise TypeError(f"{self.name} applied to too many arguments")
            return result.apply(rest)
        return result

    def __call__(self, *args):
        return self.apply(args)

    def __repr__(self):
        return f"<function {self.name}>"
