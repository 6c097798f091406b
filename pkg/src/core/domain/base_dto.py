from pydantic import BaseModel


class BaseDto(BaseModel):
    """Clase base para todos los DTOs del sistema."""

    class Config:
        from_attributes = True
        frozen = True
