"""Pine Bark 05 Material generator (Materials)."""

PARAMS = {
    "size": 2.121,
    "detail": 2,
    "roughness": 0.987,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Pine Bark 05 Material"
    for key, value in params.items():
        node[key] = value
    return node
