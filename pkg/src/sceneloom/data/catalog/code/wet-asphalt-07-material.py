"""Wet Asphalt 07 Material generator (Materials)."""

PARAMS = {
    "size": 2.194,
    "detail": 1,
    "roughness": 0.729,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Wet Asphalt 07 Material"
    for key, value in params.items():
        node[key] = value
    return node
