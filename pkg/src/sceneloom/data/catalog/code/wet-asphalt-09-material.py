"""Wet Asphalt 09 Material generator (Materials)."""

PARAMS = {
    "size": 3.469,
    "detail": 3,
    "roughness": 0.756,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Wet Asphalt 09 Material"
    for key, value in params.items():
        node[key] = value
    return node
