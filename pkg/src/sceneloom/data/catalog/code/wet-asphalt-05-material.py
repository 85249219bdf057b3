"""Wet Asphalt 05 Material generator (Materials)."""

PARAMS = {
    "size": 0.484,
    "detail": 5,
    "roughness": 0.874,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Wet Asphalt 05 Material"
    for key, value in params.items():
        node[key] = value
    return node
