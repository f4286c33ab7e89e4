from pydantic import BaseModel, ConfigDict, Field, field_validator


class SpanMixin(BaseModel):
    model_config = ConfigDict(validate_assignment=True, extra='forbid')
    start: float = Field(0.0, description="Start of the span (inclusive)")
    stop: float = Field(..., description="End of the span (inclusive)")

    @field_validator("stop")
    @classmethod
    def _start_lt_stop(cls, v: float, info):
        # start failed validation on its own if it is missing from info.data
        if "start" in info.data and info.data["start"] is not None:
            if v <= info.data["start"]:
                raise ValueError(f"stop ({v}) must be > start ({info.data['start']})")
        return v

    def assert_in_span(self, x: float, name: str = "value") -> float:
        if not (self.start <= x <= self.stop):
            raise ValueError(f"{name} '{x}' is outside the span [{self.start}…{self.stop}]")
        return x
