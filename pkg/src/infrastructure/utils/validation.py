from typing import Any, TypeVar

from pydantic import BaseModel
from pydantic import ValidationError as PydanticValidationError

from src.domain.shared.exceptions import ValidationError

T = TypeVar("T", bound=BaseModel)


def validate_model(model_class: type[T], data: dict[str, Any] | BaseModel) -> T:
    """Valida datos contra un modelo Pydantic.

    Args:
        model_class: Clase del modelo Pydantic a utilizar para la validación.
        data: Datos a validar, puede ser un diccionario o un modelo Pydantic.

    Returns:
        Una instancia del modelo Pydantic con los datos validados.

    Raises:
        ValidationError: Si los datos no cumplen con las validaciones del modelo.
    """
    if isinstance(data, BaseModel):
        data = data.model_dump()
    elif not isinstance(data, dict):
        raise ValidationError("Los datos deben ser un diccionario o un modelo Pydantic")

    try:
        return model_class(**data)
    except PydanticValidationError as e:
        errors = []
        for error in e.errors():
            loc = error.get("loc") or ("config",)
            message = error.get("msg", "Error de validación")
            errors.append(f"{loc[0]}: {message}")

        raise ValidationError(
            "Error de validación en la configuracion", details={"errors": errors}
        ) from e
