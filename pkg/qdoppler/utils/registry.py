import inspect


class Registry:
    """Maps the ``NAME`` field of a config mapping to a class.

    Example:
        >>> AXES = Registry('axes')
        >>> @AXES.register_module()
        >>> class Logspace:
        >>>     pass
        >>> axis = AXES.build(dict(NAME='Logspace', start=1e-2, stop=1, num=5))
    """

    def __init__(self, name, build_func=None):
        self.name = name
        self.module_dict = {}
        self.build_func = build_func or build_from_cfg

    def __len__(self):
        return len(self.module_dict)

    def __contains__(self, key):
        return key in self.module_dict

    def __repr__(self):
        return f'{self.__class__.__name__}(name={self.name}, items={sorted(self.module_dict)})'

    def get(self, key):
        return self.module_dict.get(key)

    def build(self, cfg, default_args=None):
        return self.build_func(cfg, self, default_args)

    def register_module(self, name=None, force=False, module=None):
        """Register a class under ``name`` (default: the class name).

        Works as a decorator, ``@AXES.register_module()``, or directly with ``module=cls``.
        Registering an existing name raises ``KeyError`` unless ``force``.
        """
        def _register(cls):
            if not inspect.isclass(cls):
                raise TypeError(f'only classes can be registered, got {type(cls)}')
            key = name or cls.__name__
            if not force and key in self.module_dict:
                raise KeyError(f'{key} is already registered in {self.name}')
            self.module_dict[key] = cls
            return cls

        if module is not None:
            return _register(module)
        return _register


def build_from_cfg(cfg, registry, default_args=None):
    """Instantiate ``registry[cfg['NAME']]`` with the remaining keys plus ``default_args``."""
    if not isinstance(cfg, dict):
        raise TypeError(f'cfg must be a mapping, got {type(cfg)}')
    kwargs = dict(cfg)
    key = kwargs.pop('NAME', None)
    if key is None:
        raise KeyError(f'{registry.name} entry needs a NAME, got {cfg}')
    cls = registry.get(key)
    if cls is None:
        raise KeyError(f'{key} is not in the {registry.name} registry, choose from {sorted(registry.module_dict)}')
    kwargs.update(default_args or {})
    try:
        return cls(**kwargs)
    except TypeError as e:
        # TypeError from a bad keyword does not name the class
        raise TypeError(f'{key}: {e}') from e
