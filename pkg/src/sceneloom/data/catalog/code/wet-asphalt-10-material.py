"""Wet Asphalt 10 Material generator (Materials)."""

PARAMS = {
    "size": 2.319,
    "detail": 4,
    "roughness": 0.939,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Wet Asphalt 10 Material"
    for key, value in params.items():
        node[key] = value
    return node
