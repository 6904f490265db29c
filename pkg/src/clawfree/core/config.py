"""Contains functions and attributes for processing config files and environment variables.

Examples
--------
>>> from clawfree.core import config
>>> config.register(name="node_budget", namespace="clawfree.solver", env="CLAWFREE_NODE_BUDGET")
>>> config.init()
>>> config.clawfree.solver.node_budget
'500000'

"""

from __future__ import annotations

import builtins
import os
import pathlib
import tomllib
import types
import typing

import dotenv
import structlog

from clawfree import __version__
from clawfree.core.exceptions import ConfigurationError, RequiredValueError

if typing.TYPE_CHECKING:
    from typing import Any, ClassVar, Self

    from clawfree.util.typing import ConfigProcessor


__all__ = (
    "Config",
    "ConfigProxy",
    "get",
    "init",
    "register",
    "reset",
)

_log: structlog.stdlib.BoundLogger = structlog.get_logger()


class ConfigProxy:
    """A proxy object that represents sub-namespaces in a 'Config' object.

    Parameters
    ----------
    config : dict[tuple[str, ...], Any]
        The internal data from a 'Config' object.
    valid_attrs : set[tuple[str, ...]]
        The set of valid namespace prefixes in the 'Config' object.
    namespace : tuple[str]
        A tuple of namespace segments representing the namespace to be proxied.

    """

    __slots__ = (
        "_config",
        "_namespace",
        "_valid_attrs",
    )

    def __init__(
        self,
        config: dict[tuple[str, ...], Any],
        valid_attrs: set[tuple[str, ...]],
        *namespace: str,
    ) -> None:
        self._config = config
        self._valid_attrs = valid_attrs
        self._namespace = namespace

    def __getattr__(self, name: str) -> Any:
        """Get a value, or a deeper namespace, from the proxied namespace.

        Raises
        ------
        AttributeError
            Raised when the attribute is not valid in the given namespace.

        """
        qualified_name: tuple[str, ...] = (*self._namespace, name)

        if qualified_name in self._config:
            return self._config[qualified_name]

        if qualified_name in self._valid_attrs:
            return type(self)(self._config, self._valid_attrs, *qualified_name)

        raise AttributeError(f"'Config' object has no attribute '{".".join(qualified_name)}'")

    def __repr__(self) -> str:
        """Get a string representation of the proxy and the proxied namespace."""
        return f"<{type(self).__qualname__}: {".".join(self._namespace)}>"


class _ConfigAttribute[T](typing.NamedTuple):
    """A registered configuration attribute."""

    #: The namespace segments followed by the attribute name.
    qualified_name: tuple[str, ...]

    #: An environment variable that takes precedence over configuration files when set.
    env: str | None = None

    #: Converts the raw configuration value.
    parser: ConfigProcessor[T] | None = None

    #: Whether initialization fails when the value is missing.
    required: bool = False

    @property
    def name(self) -> str:
        """Get the attribute name of the configuration value."""
        return self.qualified_name[-1]

    @property
    def namespace(self) -> str:
        """Get the dotted namespace in which the attribute is stored."""
        return ".".join(self.qualified_name[:-1])


@typing.final
class Config:
    """A global configuration singleton read by the command-line services.

    The solver library itself never reads it; the services layer turns it into explicit options.

    Calling 'Config()' returns the singleton created by 'Config.init'.
    """

    __slots__ = (
        "_config",
        "_valid_attrs",
    )

    #: The singleton instance of the class.
    __instance: ClassVar[Config | None] = None

    #: The registry of all configurable values.
    _registry: ClassVar[dict[tuple[str, ...], _ConfigAttribute[Any]]] = {}

    def _load(self, config_file: pathlib.Path | str | None) -> None:
        """Read environment variables and the optional TOML file into the instance.

        Raises
        ------
        RequiredValueError
            Raised if a required value is configured nowhere.

        """
        self._config: dict[tuple[str, ...], Any] = {}
        self._valid_attrs: set[tuple[str, ...]] = set()

        dotenv.load_dotenv()

        for attr in self._registry.values():
            self._process_env_var(attr)

        if config_file:
            self._process(self._load_file(config_file))

        for attr in self._registry.values():
            if attr.required and attr.qualified_name not in self._config:
                raise RequiredValueError(name=attr.name, namespace=attr.namespace)

    def __new__(cls) -> Self:
        """Return the initialized singleton 'Config' instance.

        Raises
        ------
        ConfigurationError
            Raised if 'Config.init' has not been called.

        """
        if cls.__instance is None:
            raise ConfigurationError(
                f"Class '{cls.__qualname__}' has not been initialized. "
                f"Call '{cls.__qualname__}.init()' first.",
            )

        return cls.__instance

    @classmethod
    def init(cls, config_file: pathlib.Path | str | None = None) -> Config:
        """Initialize the configuration and store it as the singleton.

        Parameters
        ----------
        config_file : pathlib.Path | str | None
            An optional TOML file to read in addition to environment variables.

        Returns
        -------
        Config
            The singleton instance.

        Raises
        ------
        ConfigurationError
            Raised if the configuration has already been initialized.

        """
        if cls.__instance is not None:
            raise ConfigurationError(f"Class '{cls.__qualname__}' has already been initialized.")

        instance = super().__new__(cls)
        instance._load(config_file)
        cls.__instance = instance

        return instance

    @classmethod
    def reset(cls) -> None:
        """Drop the singleton so that 'init' can be called again.

        Registered attributes are kept.
        """
        cls.__instance = None

    @classmethod
    def initialized(cls) -> bool:
        """Check whether 'init' has been called since the last reset."""
        return cls.__instance is not None

    def __getattr__(self, name: str) -> Any:
        """Get a top-level namespace of the configuration.

        Raises
        ------
        AttributeError
            Raised if the attribute was not configured.

        """
        if (name,) in self._valid_attrs:
            return ConfigProxy(self._config, self._valid_attrs, name)

        raise AttributeError(f"'Config' object has no attribute '{name}'")

    @classmethod
    def get(cls, name: str, namespace: str, *, required: bool = False, default: Any = ...) -> Any:
        """Get the value of the attribute from the namespace.

        Parameters
        ----------
        name : str
            The name of the attribute containing the configuration value.
        namespace : str
            The namespace in which the configuration value is stored.
        required : bool, optional
            Whether or not to raise 'RequiredValueError' if the value is not found.
        default : Any, optional
            The value to return if the configuration value is not found.

        Returns
        -------
        Any
            The configured value, the default, or None.

        Raises
        ------
        RequiredValueError
            Raised if the value is required, is not configured, and has no default value.

        """
        self = cls()
        qualified_name = cls._get_qualified_name(name, namespace)

        if qualified_name in self._config:
            return self._config[qualified_name]

        if default is not ...:
            return default

        if required:
            raise RequiredValueError(name=name, namespace=namespace)

        return None

    @classmethod
    def register[T](
        cls,
        name: str,
        namespace: str,
        *,
        env: str | None = None,
        parser: ConfigProcessor[T] | None = None,
        required: bool = False,
    ) -> None:
        """Register a new configuration attribute.

        Parameters
        ----------
        name : str
            The name of the attribute in the configuration file.
        namespace : str
            The dotted namespace in the configuration file to look for the value.
        env : str | None, optional
            An environment variable that can be used to supply the configuration value.
        parser : ConfigProcessor[T] | None, optional
            A parser used to convert the raw value to 'T'.
        required : bool, optional
            Whether or not initialization fails if the value cannot be found.

        Raises
        ------
        RequiredValueError
            Raised if the configuration is already initialized and a required value is missing.

        """
        qualified_name = cls._get_qualified_name(name, namespace)

        if qualified_name in cls._registry:
            return

        attr = _ConfigAttribute(qualified_name, env=env, parser=parser, required=required)
        cls._registry[qualified_name] = attr

        if not cls.initialized():
            return

        self = cls()

        if qualified_name in self._config and parser:
            self._config[qualified_name] = self._freeze(parser(self._config[qualified_name]))
        else:
            self._process_env_var(attr)

        if required and qualified_name not in self._config:
            raise RequiredValueError(name=attr.name, namespace=attr.namespace)

    @property
    def version(self) -> str:
        """Get the version of the application."""
        return __version__

    def _process_env_var(self, attr: _ConfigAttribute[Any]) -> None:
        """Read the value of a registered attribute from its environment variable, if set."""
        if attr.qualified_name in self._config or not attr.env or attr.env not in os.environ:
            return

        self._store(attr.qualified_name, os.environ[attr.env], attr.parser)

    def _load_file(self, config_file: pathlib.Path | str) -> dict[str, Any]:
        """Load a TOML configuration file.

        Raises
        ------
        ConfigurationError
            Raised if the file cannot be found or is not valid TOML.

        """
        path = pathlib.Path(config_file)

        try:
            with path.open("rb") as fp:
                return tomllib.load(fp)
        except FileNotFoundError as e:
            raise ConfigurationError(str(e)) from e
        except tomllib.TOMLDecodeError as e:
            raise ConfigurationError(f"{path}: {e}") from e

    def _process(self, value: Any, *namespace: str) -> None:
        """Process a value from the configuration file."""
        if namespace in self._config:
            _log.debug(
                "Value already set from the environment. Not overwriting it.",
                namespace=".".join(namespace),
            )
            return

        attr = self._registry.get(namespace)

        if isinstance(value, dict) and attr is None:
            for k, v in value.items():
                self._process(v, *namespace, k)
            return

        self._store(namespace, value, attr.parser if attr else None)

    def _store(
        self,
        qualified_name: tuple[str, ...],
        value: Any,
        parser: ConfigProcessor[Any] | None,
    ) -> None:
        """Parse, freeze and store a value and mark its namespace prefixes as valid."""
        if parser:
            try:
                value = parser(value)
            except (TypeError, ValueError) as e:
                raise ConfigurationError(
                    f"Invalid value {value!r} for `{".".join(qualified_name)}`: {e}",
                ) from e

        self._config[qualified_name] = self._freeze(value)

        for i in range(1, len(qualified_name)):
            self._valid_attrs.add(qualified_name[:i])

    def _freeze(self, value: Any) -> Any:
        """Get a nested read-only version of the value."""
        match type(value):
            case builtins.dict:
                return types.MappingProxyType({k: self._freeze(v) for k, v in value.items()})
            case builtins.list | builtins.set | builtins.tuple:
                return tuple(self._freeze(v) for v in value)
            case _:
                return value

    @staticmethod
    def _get_qualified_name(name: str, namespace: str) -> tuple[str, ...]:
        """Get the tuple of the namespace and name that represents a configuration value.

        Raises
        ------
        ValueError
            Raised if 'name' or 'namespace' are empty strings.

        """
        if not name:
            raise ValueError("`name` must be a non-empty string.")

        if not namespace:
            raise ValueError("`namespace` must be a non-empty string")

        return (*namespace.split("."), name.strip())


def __getattr__(name: str) -> Any:
    """Get a top-level namespace from the configuration singleton.

    Raises
    ------
    AttributeError
        Raised if the attribute was not configured.

    """
    return getattr(Config(), name)


#: An alias for 'Config.init'
init = Config.init

#: An alias for 'Config.register'
register = Config.register

#: An alias for 'Config.get'
get = Config.get

#: An alias for 'Config.reset'
reset = Config.reset
